import io
import json

from core.exceptions import CapExceededError, SymbolError, handle_exception
from core.logger import verbosity_level
from core.responses import ErrorCode, ErrorModel, error_response


def test_error_model_schema_example():
    schema = ErrorModel.model_json_schema()
    assert schema["example"]["code"] == ErrorCode.SYMBOL_ERROR.value
    assert "Config" not in vars(ErrorModel)


def test_error_response_envelope():
    assert error_response(code=ErrorCode.RESOURCE_LIMIT, message="x", data={"cap": 3}) == {
        "code": "RESOURCE_LIMIT", "message": "x", "data": {"cap": 3},
    }


def test_handle_exception_text_and_json():
    stream = io.StringIO()
    assert handle_exception(CapExceededError("too many edges"), stream=stream) == 1
    assert stream.getvalue() == "error: too many edges\n"

    stream = io.StringIO()
    handle_exception(SymbolError("bad edge", edge=2), as_json=True, stream=stream)
    document = json.loads(stream.getvalue())
    assert document["code"] == "SYMBOL_ERROR"
    assert document["data"]["edge"] == 2


def test_verbosity_level():
    assert [verbosity_level(n) for n in (0, 1, 2, 5)] == ["WARNING", "INFO", "DEBUG", "DEBUG"]
