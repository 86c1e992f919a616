import os
import pathlib
import sys

# Allow running straight from a source checkout after `cmake --build build`.
_build_python = pathlib.Path(__file__).resolve().parents[2] / "build" / "python"
if "PYTHONPATH" not in os.environ and _build_python.is_dir():
    sys.path.insert(0, str(_build_python))
