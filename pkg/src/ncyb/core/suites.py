"""
Suite registry

Each suite name maps to a builder returning (task_id, task) pairs for a config.
`run_suite` feeds them to a SuiteRunner; `all` concatenates every other suite,
each with its own YAML defaults under the shared n and seed; samples and
trunc_order override those defaults only when given explicitly.
"""

from dataclasses import replace
from typing import Callable, Dict, List, Tuple

from ncyb.config import SUITE_NAMES, SuiteConfig, build_config, get_settings
from ncyb.core.report import Check, Report, skipped
from ncyb.core.rng import SINGULAR_ERRORS, ResampleLog, SeedStream, with_resampling
from ncyb.core.runner import SuiteRunner, Task
from ncyb.matrix.inverse import matrix_inverse
from ncyb.matrix.labeled import LabeledMat
from ncyb.matrix.ops import FieldOps, MatrixOps, RationalOps, RingOps
from ncyb.utils.exceptions import ConfigurationError, SuiteError
from ncyb.utils.logging import setup_logger

logger = setup_logger(__name__)

Tasks = List[Tuple[str, Task]]
SuiteBuilder = Callable[[SuiteConfig, ResampleLog], Tasks]

_REGISTRY: Dict[str, SuiteBuilder] = {}

# block size of operator-valued entries in quasi-determinant samples
OPERATOR_DIM = 2

# options `all` forwards to each suite only when given on the command line
SHARED_OPTIONAL = ("samples", "trunc_order")


def register(name: str) -> Callable[[SuiteBuilder], SuiteBuilder]:
    def wrap(builder: SuiteBuilder) -> SuiteBuilder:
        if name not in SUITE_NAMES:
            raise SuiteError(f"cannot register unknown suite {name!r}")
        _REGISTRY[name] = builder
        return builder

    return wrap


def registered() -> List[str]:
    return [name for name in SUITE_NAMES if name in _REGISTRY]


def _tagged(prefix: str, checks: List[Check]) -> List[Check]:
    return [replace(c, name=prefix + c.name) for c in checks]


# quasidet


def random_matrix(size: int, ops: RingOps, stream: SeedStream) -> LabeledMat:
    """Small-rational entries; operator entries are random OPERATOR_DIM x OPERATOR_DIM blocks."""
    if isinstance(ops, MatrixOps):
        base = ops.entry_ops
        grid = [
            [stream.matrix(ops.dim, ops.dim, base) for _ in range(size)] for _ in range(size)
        ]
        idx = range(1, size + 1)
        return LabeledMat(idx, idx, grid, ops)
    return stream.matrix(size, size, ops)


def symbolic_matrix(size: int) -> LabeledMat:
    from ncyb.ring.tower import gen, get_field

    names = tuple(f"a{i}{j}" for i in range(1, size + 1) for j in range(1, size + 1))
    K = get_field(names)
    values = {
        (i, j): gen(K, f"a{i}{j}") for i in range(1, size + 1) for j in range(1, size + 1)
    }
    return LabeledMat.from_dict(size, size, values, FieldOps(K))


@register("quasidet")
def quasidet_tasks(config: SuiteConfig, log: ResampleLog) -> Tasks:
    from ncyb.quasidet.identities import verify_qd_identities

    settings = get_settings()
    if config.mode == "symbolic":
        if config.n > settings.max_n_symbolic:
            raise ConfigurationError(f"n={config.n} exceeds the symbolic bound")

        def symbolic(size: int) -> List[Check]:
            return _tagged(f"{size}x{size} symbolic: ", verify_qd_identities(symbolic_matrix(size)))

        return [
            (f"symbolic-{size}", lambda size=size: symbolic(size))
            for size in range(2, config.n + 1)
        ]
    top = min(config.n, 4)
    rings: List[Tuple[str, RingOps]] = [
        ("rational", RationalOps()),
        ("operator", MatrixOps(RationalOps(), OPERATOR_DIM)),
    ]
    root = SeedStream(config.seed, "quasidet")
    tasks: Tasks = []
    for s in range(config.samples):
        size = 2 + s % (top - 1)
        label, ops = rings[s % 2]

        def sample(s: int = s, size: int = size, label: str = label, ops: RingOps = ops):
            prefix = f"sample {s} {size}x{size} {label}: "

            def draw(stream: SeedStream) -> LabeledMat:
                A = random_matrix(size, ops, stream)
                matrix_inverse(A)
                return A

            try:
                A = with_resampling(root.split(f"matrix-{s}"), draw, log)
            except SINGULAR_ERRORS as e:
                return [skipped(prefix + "draw", "quasi-determinant calculus", e)]
            return _tagged(prefix, verify_qd_identities(A))

        tasks.append((f"sample-{s}", sample))
    return tasks


# quantum suites


@register("uqrep")
def uqrep_tasks(config: SuiteConfig, log: ResampleLog) -> Tasks:
    from ncyb.uqrep.verify import verify_algebra_relations

    return [("algebra", lambda: verify_algebra_relations(config.n))]


@register("ybmap")
def ybmap_suite_tasks(config: SuiteConfig, log: ResampleLog) -> Tasks:
    from ncyb.ybmap.verify import ybmap_tasks

    return ybmap_tasks(config.n, config.seed, log)


@register("appendixA")
def appendix_a_tasks(config: SuiteConfig, log: ResampleLog) -> Tasks:
    from ncyb.ybmap.verify import verify_hopf_properties

    return [("hopf", lambda: verify_hopf_properties(config.n))]


# classical suites


@register("classical")
def classical_suite_tasks(config: SuiteConfig, log: ResampleLog) -> Tasks:
    from ncyb.classical.verify import classical_tasks

    tasks = classical_tasks(config.n, config.mode, config.seed, config.samples, log)
    return [(f"classical-{i}", t) for i, t in enumerate(tasks)]


@register("poisson")
def poisson_suite_tasks(config: SuiteConfig, log: ResampleLog) -> Tasks:
    from ncyb.classical.poisson import poisson_tasks

    return [(f"poisson-{i}", t) for i, t in enumerate(poisson_tasks(config.n, config.seed))]


@register("appendixB")
def appendix_b_tasks(config: SuiteConfig, log: ResampleLog) -> Tasks:
    from ncyb.classical.asymptotics import qexp_series_checks

    return [("qexp", lambda: qexp_series_checks(config.trunc_order))]


@register("all")
def all_tasks(config: SuiteConfig, log: ResampleLog) -> Tasks:
    shared = {
        key: getattr(config, key) for key in SHARED_OPTIONAL if key in config.model_fields_set
    }
    tasks: Tasks = []
    for name in SUITE_NAMES:
        if name == "all":
            continue
        sub = build_config(name, n=config.n, seed=config.seed, **shared)
        for task_id, fn in suite_tasks(sub, log):
            tasks.append(
                (f"{name}/{task_id}", lambda fn=fn, name=name: _tagged(f"{name}: ", fn()))
            )
    return tasks


def suite_tasks(config: SuiteConfig, log: ResampleLog) -> Tasks:
    builder = _REGISTRY.get(config.suite)
    if builder is None:
        raise SuiteError(f"no builder registered for suite {config.suite!r}")
    return builder(config, log)


def run_suite(config: SuiteConfig) -> Report:
    """Run a suite to completion; deterministic in (suite, n, mode, seed, samples, trunc_order)."""
    log = ResampleLog()
    runner = SuiteRunner(config)
    for task_id, fn in suite_tasks(config, log):
        runner.add_task(task_id, fn, anchor=config.suite)
    report = runner.run()
    report.config["resampling"] = log.to_dict()
    logger.info(
        "suite complete",
        suite=config.suite,
        status=report.status,
        resample_rate=log.rate,
    )
    return report
