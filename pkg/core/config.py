from typing import Any, Dict

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

from .logger import debug, log_manager

# 默认配置
DEFAULT_CONFIG = {
    "APP_NAME": "farey",
    "APP_VERSION": "1.0.0",
    "LOG_LEVEL": "WARNING",
    "LOG_FILE": "",
    "MAX_EDGES": "20000",
    "BFS_CAP": "100000",
    "BFS_CAP_FACTOR": "10",
    "LLT_MAX_STEPS": "1000000",
    "WOHLFAHRT_MAX_LEVEL": "8",
    "MEDIANT_INSERTION": "rightmost",
}

# 加载环境变量；没有 .env 文件时直接使用默认配置
dotenv_loaded = load_dotenv()


class Settings(BaseSettings):
    """运行配置，环境变量统一使用 FAREY_ 前缀"""

    model_config = SettingsConfigDict(env_prefix="FAREY_", case_sensitive=True, extra="ignore")

    # 应用相关配置
    APP_NAME: str = DEFAULT_CONFIG["APP_NAME"]
    APP_VERSION: str = DEFAULT_CONFIG["APP_VERSION"]

    # 日志相关配置
    LOG_LEVEL: str = DEFAULT_CONFIG["LOG_LEVEL"]
    LOG_FILE: str = DEFAULT_CONFIG["LOG_FILE"]

    # 算法资源上限
    MAX_EDGES: int = int(DEFAULT_CONFIG["MAX_EDGES"])
    BFS_CAP: int = int(DEFAULT_CONFIG["BFS_CAP"])
    BFS_CAP_FACTOR: int = int(DEFAULT_CONFIG["BFS_CAP_FACTOR"])
    LLT_MAX_STEPS: int = int(DEFAULT_CONFIG["LLT_MAX_STEPS"])
    WOHLFAHRT_MAX_LEVEL: int = int(DEFAULT_CONFIG["WOHLFAHRT_MAX_LEVEL"])

    # 构造 Farey 符号时优先细分哪一条未配对边：leftmost / rightmost
    MEDIANT_INSERTION: str = DEFAULT_CONFIG["MEDIANT_INSERTION"]

    def summary(self) -> Dict[str, Any]:
        """以字典形式返回当前配置"""
        return self.model_dump()


# 创建单例实例
settings = Settings()

# 日志级别以配置为准
log_manager.reconfigure(log_level=settings.LOG_LEVEL, log_file=settings.LOG_FILE)


def log_settings() -> None:
    """在 DEBUG 级别打印当前配置"""
    debug("加载 .env 文件成功" if dotenv_loaded else ".env 文件未找到，使用默认配置")
    debug("----------------------------------------------------------------")
    for key, value in settings.summary().items():
        debug(f"{key}: {value}")
    debug("----------------------------------------------------------------")
