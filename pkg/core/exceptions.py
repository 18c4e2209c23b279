import sys
from typing import Any, TextIO

from .responses import ErrorCode, error_response, render_json
from .logger import debug, exception

class FareyException(Exception):
    """领域异常基类"""

    def __init__(
        self,
        code: ErrorCode = ErrorCode.INTERNAL_ERROR,
        message: str = "内部错误",
        exit_code: int = 1,
        data: Any = None
    ):
        self.code = code
        self.message = message
        self.exit_code = exit_code
        self.data = data
        super().__init__(self.message)

class ParameterError(FareyException):
    """参数错误：文本格式不正确或前置条件不满足"""

    def __init__(self, message: str = "参数错误", data: Any = None):
        super().__init__(
            code=ErrorCode.PARAM_ERROR,
            message=message,
            data=data
        )

class SymbolError(ParameterError):
    """Farey 符号错误，data 中带出出错的边序号"""

    def __init__(self, message: str = "Farey 符号无效", edge: Any = None):
        super().__init__(message=message, data={"edge": edge} if edge is not None else None)
        self.code = ErrorCode.SYMBOL_ERROR
        self.edge = edge

class CapExceededError(FareyException):
    """超出资源上限"""

    def __init__(self, message: str = "超出资源上限", data: Any = None):
        super().__init__(
            code=ErrorCode.RESOURCE_LIMIT,
            message=message,
            data=data
        )

class InconclusiveError(FareyException):
    """检验无法得出结论（与否定结论不同）"""

    def __init__(self, message: str = "无法得出结论", data: Any = None):
        super().__init__(
            code=ErrorCode.INCONCLUSIVE,
            message=message,
            data=data
        )

class InternalError(FareyException):
    """内部不变量被破坏"""

    def __init__(self, message: str = "内部错误", data: Any = None):
        super().__init__(
            code=ErrorCode.INTERNAL_ERROR,
            message=message,
            data=data
        )


def handle_exception(exc: Exception, as_json: bool = False, stream: TextIO = None) -> int:
    """
    把异常写到诊断流并返回进程退出码

    Args:
        exc: 捕获到的异常
        as_json: 是否以 JSON 错误信封输出
        stream: 输出流，默认 stderr

    Returns:
        退出码
    """
    stream = stream or sys.stderr
    if isinstance(exc, FareyException):
        debug(f"{exc.code.value}: {exc.message}")
        code, message, data, exit_code = exc.code, exc.message, exc.data, exc.exit_code
    else:
        exception(f"未处理的异常: {exc}")
        code, message, data, exit_code = ErrorCode.INTERNAL_ERROR, str(exc) or "内部错误", None, 1

    if as_json:
        stream.write(render_json(error_response(code=code, message=message, data=data)) + "\n")
    else:
        stream.write(f"error: {message}\n")
    return exit_code
