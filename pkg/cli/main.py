"""
命令行入口

退出码: 0 成功；2 输入错误（输出机器可读的错误对象）；3 求解器不收敛。
"""

import functools
import json
import logging
from pathlib import Path
from typing import Any, Callable, Optional, Type

import click
from pydantic import BaseModel, ValidationError

from antidist.sdp import antidist_sdp
from config.logging_setup import setup_logging
from config.settings import settings
from criteria.bounds import (
    corollary5_bound,
    psi_epistemic_ratio_bound,
    theorem7_avg_ratio_bound,
    theorem8_bound,
)
from criteria.classifier import ClassificationEngine
from criteria.witness import classical_parity_encoding, optimal_parity_oblivious_config, s_witness
from geometry.hemisphere import great_circle_test
from geometry.qubit_triples import antidist_gammas, antidist_povm_qubit, triple_overlaps, triple_violations
from ks_model.model import KsIntegrator
from ks_model.sampling import SamplingScheme
from quantum.bloch import bloch_from_qubit
from quantum.codec import encode_matrix, preparation_to_dict
from quantum.exceptions import AntidistError, ConvergenceError, DomainError
from quantum.mub import mub_bases
from quantum.states import MixedPreparation
from .scenarios import SCENARIOS, run_scenario
from .schemas import PreparationsFile, QubitTripleFile, StatesFile, SWitnessFile
from .serialization import EXACT_DIGITS, dumps

logger = logging.getLogger(__name__)

EXIT_INPUT = 2
EXIT_CONVERGENCE = 3

BOUNDS = {
    "corollary5": lambda d, n: corollary5_bound(d),
    "theorem7": lambda d, n: theorem7_avg_ratio_bound(d),
    "theorem8": lambda d, n: theorem8_bound(n, d),
    "psi-ratio": lambda d, n: psi_epistemic_ratio_bound(d),
}


def _emit(payload: Any) -> None:
    click.echo(dumps(payload))


def _input_error(code: str, message: str, details: Optional[dict] = None) -> dict:
    return {"error": {"error_code": code, "error_type": "InputError", "message": message, "details": details or {}}}


def handles_errors(func: Callable) -> Callable:
    """把库异常映射成退出码与 JSON 错误对象"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return func(*args, **kwargs)
        except ConvergenceError as e:
            logger.error(f"求解器未收敛: {e.message}")
            _emit({"error": e.to_dict()})
            ctx.exit(EXIT_CONVERGENCE)
        except AntidistError as e:
            logger.error(f"输入不满足要求: {e.message}")
            _emit({"error": e.to_dict()})
            ctx.exit(EXIT_INPUT)
        except ValidationError as e:
            logger.error(f"输入文件格式错误: {e.error_count()} 处")
            _emit(_input_error("schema", "输入文件不符合格式", {"errors": json.loads(e.json(include_url=False))}))
            ctx.exit(EXIT_INPUT)
        except json.JSONDecodeError as e:
            _emit(_input_error("json", f"JSON 解析失败: {e.msg}", {"line": e.lineno, "column": e.colno}))
            ctx.exit(EXIT_INPUT)

    return wrapper


def _load(path: str, model: Type[BaseModel]) -> BaseModel:
    text = Path(path).read_text(encoding="utf-8")
    return model.model_validate(json.loads(text))


@click.group()
@click.option("--log-level", default=settings.LOG_LEVEL, show_default=True, help="日志级别")
@click.option("--log-file", default=settings.LOG_FILE, help="日志文件")
@click.version_option(settings.VERSION, prog_name=settings.APP_NAME)
def cli(log_level: str, log_file: Optional[str]):
    """反区分性与认知重叠工具箱"""
    setup_logging(log_level, log_file)


@cli.command("antidist")
@click.argument("states_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--tol", type=float, default=None, help="对偶间隙容差")
@handles_errors
def antidist_command(states_file: str, tol: Optional[float]):
    """求解反区分度 SDP"""
    states = _load(states_file, StatesFile).to_states()
    result = antidist_sdp(states, gap_tolerance=tol)
    _emit({**result.to_dict(), "verified": result.verify(states, tol)})


@cli.command("classify")
@click.argument("preps_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--max-tuples", type=int, default=None, help="纯态元组数上限")
@click.option("--workers", type=int, default=None, help="元组并行线程数")
@handles_errors
def classify_command(preps_file: str, max_tuples: Optional[int], workers: Optional[int]):
    """分类混合制备集合"""
    preps = _load(preps_file, PreparationsFile).to_preparations()
    overrides = {k: v for k, v in (("max_tuples", max_tuples), ("max_workers", workers)) if v is not None}
    _emit(ClassificationEngine(overrides).classify(preps))


@cli.command("ks-overlap")
@click.argument("preps_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--samples", type=int, default=None, help="球面样本数")
@click.option("--seed", type=int, default=None, help="随机种子")
@click.option("--scheme", type=click.Choice([s.value for s in SamplingScheme]), default=None, help="采样方案")
@handles_errors
def ks_overlap_command(preps_file: str, samples: Optional[int], seed: Optional[int], scheme: Optional[str]):
    """KS 模型中的认知重叠 (Monte Carlo)"""
    preps = _load(preps_file, PreparationsFile).to_preparations()
    integrator = KsIntegrator()
    sample = integrator.sample(samples, seed, scheme)
    _emit(integrator.overlap_mixed(preps, sample))


@cli.command("mub")
@click.option("--dim", "d", type=int, required=True, help="维数")
@click.option("--count", type=int, required=True, help="基的组数")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="写入文件")
@handles_errors
def mub_command(d: int, count: int, out: Optional[str]):
    """生成互不偏基，每组基写成一个等权混合制备；按双精度全位数输出，可直接作为 classify 的输入"""
    bases = mub_bases(d, count)
    payload = {
        "dim": d,
        "count": count,
        "preparations": [preparation_to_dict(MixedPreparation.uniform(b)) for b in bases],
    }
    text = dumps(payload, EXACT_DIGITS)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
        logger.info(f"已写入 {out}")
    click.echo(text)


@cli.command("geometry")
@click.argument("states_file", type=click.Path(exists=True, dir_okay=False))
@handles_errors
def geometry_command(states_file: str):
    """量子比特三元组的几何判据与 γ-POVM"""
    states = _load(states_file, QubitTripleFile).to_states()
    failed = triple_violations(*states)
    vectors = [bloch_from_qubit(s) for s in states]
    payload = {
        "antidist": not failed,
        "failed_conditions": failed,
        "overlaps": list(triple_overlaps(*states)),
        "great_circle": great_circle_test(*vectors),
        "bloch_vectors": [list(v.as_array()) for v in vectors],
    }
    if not failed:
        try:
            povm = antidist_povm_qubit(*states)
            payload["gammas"] = list(antidist_gammas(*states))
            payload["povm"] = [encode_matrix(e) for e in povm.effects]
            payload["error_sum"] = povm.error_sum([s.density() for s in states])
        except DomainError as e:
            payload["povm_error"] = e.to_dict()
    _emit(payload)


@cli.command("bounds")
@click.option("--which", type=click.Choice(sorted(BOUNDS)), required=True, help="上界种类")
@click.option("--dim", "d", type=int, required=True, help="维数")
@click.option("--n", "n", type=int, default=None, help="制备数 (theorem8)")
@handles_errors
def bounds_command(which: str, d: int, n: Optional[int]):
    """闭式上界"""
    if which == "theorem8" and n is None:
        raise DomainError("theorem8 需要 --n")
    _emit({"which": which, "dim": d, "n": n, "value": BOUNDS[which](d, n)})


@cli.command("s-witness")
@click.argument("config_file", type=click.Path(exists=True, dir_okay=False), required=False)
@click.option("--preset", type=click.Choice(["optimal", "classical"]), default=None, help="内置配置")
@handles_errors
def s_witness_command(config_file: Optional[str], preset: Optional[str]):
    """奇偶无关复用任务的 S 见证"""
    if (config_file is None) == (preset is None):
        raise DomainError("需要且只能给出配置文件或 --preset 之一")
    if preset == "optimal":
        states, measurements = optimal_parity_oblivious_config()
    elif preset == "classical":
        states, measurements = classical_parity_encoding()
    else:
        parsed = _load(config_file, SWitnessFile)
        states, measurements = parsed.to_states(), parsed.to_measurements()
    _emit(s_witness(states, measurements))


@cli.command("example")
@click.argument("name", type=click.Choice(list(SCENARIOS)))
@click.option("--samples", type=int, default=None, help="KS 积分样本数")
@click.option("--seed", type=int, default=None, help="随机种子")
@handles_errors
def example_command(name: str, samples: Optional[int], seed: Optional[int]):
    """复现命名示例，输出期望值与计算值"""
    _emit(run_scenario(name, samples, seed))


def run(argv=None) -> int:
    """以退出码返回，供 main.py 调用"""
    try:
        rv = cli.main(args=argv, prog_name=settings.APP_NAME, standalone_mode=False)
    except click.UsageError as e:
        param = getattr(e, "param", None)
        logger.error(f"命令行参数错误: {e.format_message()}")
        _emit(_input_error("usage", e.format_message(), {"param": param.name} if param is not None else None))
        return EXIT_INPUT
    except click.ClickException as e:
        e.show()
        return EXIT_INPUT
    except click.exceptions.Abort:
        return 1
    return rv if isinstance(rv, int) else 0
