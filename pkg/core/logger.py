import logging
import sys
from typing import List, Optional

from loguru import logger

# 命令行默认使用的简短格式；写文件时带上时间与行号
CONSOLE_FORMAT = "<level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} - {message}"

# -v 的个数到日志级别
VERBOSITY_LEVELS = ("WARNING", "INFO", "DEBUG")


class LogConfig:
    """日志配置类"""

    def __init__(
        self,
        log_level: str = "WARNING",
        log_file: Optional[str] = None,
        rotation: str = "50 MB",
        retention: str = "7 days",
        intercept_loggers: Optional[List[str]] = None
    ):
        self.log_level = log_level
        self.log_file = log_file
        self.rotation = rotation
        self.retention = retention
        # sympy 偶尔通过标准 logging 输出警告
        self.intercept_loggers = intercept_loggers if intercept_loggers is not None else ["sympy"]


class InterceptHandler(logging.Handler):
    """把标准 logging 的记录转交给 loguru"""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # 跳过 logging 模块自身的栈帧，定位真正的调用者
        frame, depth = logging.currentframe(), 2
        while frame and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1
        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


class LogManager:
    """
    日志管理类（单例）

    stdout 只输出命令结果，所有日志都写到 stderr；
    配置了 LOG_FILE 时另外写一份按大小轮转的文件日志。
    """

    _instance = None

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self, config: Optional[LogConfig] = None):
        if not hasattr(self, "initialized"):
            self.config = config or LogConfig()
            self.setup()
            self.initialized = True

    def setup(self) -> None:
        """按当前配置重新安装全部处理器"""
        logger.remove()
        # 每次写入时再取 sys.stderr，测试中替换过的流也能收到日志
        logger.add(
            lambda message: sys.stderr.write(message),
            level=self.config.log_level,
            format=CONSOLE_FORMAT,
            colorize=False,
        )
        if self.config.log_file:
            logger.add(
                self.config.log_file,
                level=self.config.log_level,
                format=FILE_FORMAT,
                rotation=self.config.rotation,
                retention=self.config.retention,
            )
        for name in self.config.intercept_loggers:
            std_logger = logging.getLogger(name)
            std_logger.handlers = [InterceptHandler()]
            std_logger.propagate = False

    def reconfigure(self, log_level: Optional[str] = None, log_file: Optional[str] = None) -> None:
        """
        修改级别或日志文件后重新安装处理器

        Args:
            log_level: 新的日志级别，None 表示保持不变
            log_file: 新的日志文件路径，空字符串表示关闭文件日志，None 表示保持不变
        """
        if log_level is not None:
            self.config.log_level = log_level.upper()
        if log_file is not None:
            self.config.log_file = log_file or None
        self.setup()

    @property
    def level(self) -> str:
        return self.config.log_level


log_manager = LogManager()


def set_level(level: str) -> None:
    """调整所有处理器的日志级别"""
    log_manager.reconfigure(log_level=level)


def verbosity_level(count: int) -> str:
    """-v 的个数对应的级别：0 为 WARNING，1 为 INFO，2 及以上为 DEBUG"""
    return VERBOSITY_LEVELS[min(max(count, 0), len(VERBOSITY_LEVELS) - 1)]


debug = logger.debug
info = logger.info
warning = logger.warning
error = logger.error
critical = logger.critical
exception = logger.exception
