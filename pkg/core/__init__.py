from .logger import debug, info, warning, error, critical, exception, set_level, verbosity_level
from .config import settings, log_settings
from .responses import ErrorCode, ErrorModel, error_response, jsonable, render_json
from .exceptions import (
    FareyException, ParameterError, SymbolError, CapExceededError,
    InconclusiveError, InternalError, handle_exception
)

# 可以添加 __all__ 来控制 from core import * 的行为
__all__ = [
    # 日志
    'debug', 'info', 'warning', 'error', 'critical', 'exception', 'set_level', 'verbosity_level',
    # 配置
    'settings', 'log_settings',
    # 响应
    'ErrorCode', 'ErrorModel', 'error_response', 'jsonable', 'render_json',
    # 异常
    'FareyException', 'ParameterError', 'SymbolError', 'CapExceededError',
    'InconclusiveError', 'InternalError', 'handle_exception',
]
