"""
命令行界面
"""

from .main import cli, run
from .scenarios import SCENARIOS, ScenarioResult, run_scenario
from .serialization import dumps, to_jsonable

__all__ = [
    "cli",
    "run",
    "SCENARIOS",
    "ScenarioResult",
    "run_scenario",
    "dumps",
    "to_jsonable",
]
