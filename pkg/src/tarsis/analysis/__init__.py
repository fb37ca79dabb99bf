from .abstract import AbstractInterpreter, AbstractResult, AssertRecord, abstract_run
from .concrete import ConcreteResult, Inputs, collecting_eval, concrete_run, eval_expr
from .config import AnalysisConfig
from .report import Report, build_report

__all__ = [
    "AbstractInterpreter", "AbstractResult", "AnalysisConfig", "AssertRecord",
    "ConcreteResult", "Inputs", "Report", "abstract_run", "build_report",
    "collecting_eval", "concrete_run", "eval_expr",
]
