import importlib.util
import sys
from pathlib import Path

_ROOT_PATH = Path(__file__, "..", "..", "..").resolve()

# Import "fan-tilde.py" as "fan_tilde_cli"
CLI_PATH = _ROOT_PATH / "fan-tilde.py"
spec = importlib.util.spec_from_file_location("fan_tilde_cli", CLI_PATH)
sys.modules["fan_tilde_cli"] = fan_tilde_cli = importlib.util.module_from_spec(spec)
spec.loader.exec_module(fan_tilde_cli)
