import json
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field
from pydantic_core import to_jsonable_python
from enum import Enum

class ErrorCode(str, Enum):
    """错误码枚举"""
    PARAM_ERROR = "PARAM_ERROR"          # 输入格式错误或前置条件不满足
    SYMBOL_ERROR = "SYMBOL_ERROR"        # Farey 符号语法或不变量错误
    RESOURCE_LIMIT = "RESOURCE_LIMIT"    # 超出资源上限
    INCONCLUSIVE = "INCONCLUSIVE"        # 检验无法给出结论
    INTERNAL_ERROR = "INTERNAL_ERROR"    # 内部不变量被破坏

class ErrorModel(BaseModel):
    """统一错误模型"""
    code: str = Field(ErrorCode.INTERNAL_ERROR.value, description="错误码")
    message: str = Field("操作失败", description="错误消息")
    data: Optional[Any] = Field(None, description="错误详情")

    model_config = ConfigDict(json_schema_extra={
        "example": {
            "code": "SYMBOL_ERROR",
            "message": "第 2 条边不满足 Farey 条件",
            "data": {"edge": 2}
        }
    })

def error_response(*, code: str = ErrorCode.INTERNAL_ERROR, message: str = "操作失败", data: Any = None) -> Dict[str, Any]:
    """
    错误响应

    Args:
        code: 错误代码
        message: 错误消息
        data: 错误详情数据

    Returns:
        统一格式的错误字典
    """
    code_value = code.value if isinstance(code, ErrorCode) else str(code)
    return ErrorModel(code=code_value, message=message, data=data).model_dump()

def jsonable(obj: Any) -> Any:
    """把 pydantic 模型、模型列表或普通数据转换成可 JSON 序列化的结构"""
    if isinstance(obj, BaseModel):
        return obj.model_dump(mode="json", by_alias=True)
    if isinstance(obj, (list, tuple)):
        return [jsonable(item) for item in obj]
    return to_jsonable_python(obj)

def render_json(obj: Any) -> str:
    """
    渲染 JSON 文本

    键的顺序与模型字段顺序一致，保证相同输入得到逐字节相同的输出。
    """
    return json.dumps(jsonable(obj), indent=2, ensure_ascii=False)
