import click

from core import settings, log_settings
from core.logger import info
from apps.cli import farey


def create_app() -> click.Group:
    """
    创建并配置命令行应用

    Returns:
        配置好的 click 命令组
    """
    log_settings()
    info(f"{settings.APP_NAME} {settings.APP_VERSION} 已启动")
    return farey


app = create_app()

if __name__ == "__main__":
    app(prog_name=settings.APP_NAME)
