"""Corpus runs: evaluate every graph of a source and aggregate the records.

Graphs are produced in the parent process and evaluated in a worker pool
with ``imap``, so records come back in corpus order and a report does not
depend on the worker count.  Counterexamples reported by workers are
evaluated once more in the parent before they are counted.
"""

from __future__ import annotations

import collections
import dataclasses
import functools
import logging
import multiprocessing as mp
import os
import sys
from pathlib import Path

from tqdm import tqdm

from fan_tilde.conditions.constants import ADMISSIBLE
from fan_tilde.conditions.constants import ALL_CONDITIONS
from fan_tilde.conditions.constants import DIRAC
from fan_tilde.conditions.constants import FAN_TILDE
from fan_tilde.conditions.constants import LI_LIU_HAM
from fan_tilde.conditions.constants import LI_LIU_HC
from fan_tilde.conditions.constants import MCDIARMID_YOLOV
from fan_tilde.conditions.constants import THM_HAM
from fan_tilde.conditions.constants import THM_HC
from fan_tilde.conditions.constants import ZHOU_ET_AL
from fan_tilde.conditions.predicates import normalise_condition_id
from fan_tilde.errors import PreconditionError
from fan_tilde.graph_core.formats import parse_graph6
from fan_tilde.harness.enumeration import MAX_LABELED_ORDER
from fan_tilde.harness.enumeration import count_labeled_graphs
from fan_tilde.harness.enumeration import enumerate_labeled_graphs
from fan_tilde.harness.enumeration import graphs_from_file
from fan_tilde.harness.enumeration import random_graphs
from fan_tilde.harness.records import evaluate_graph

TYPE_CHECKING = False
if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator

    from fan_tilde.graph_core.graph import Graph
    from fan_tilde.harness.records import VerificationRecord

_log = logging.getLogger(__name__)

WORKERS_ENV = "FAN_TILDE_WORKERS"

ALL_LABELED = "all-labeled"
GRAPH6_FILE = "file"
RANDOM = "random"
SOURCES = (ALL_LABELED, GRAPH6_FILE, RANDOM)

CHUNK_SIZE = 64


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """One corpus run.

    Attributes:
        source : ALL_LABELED, GRAPH6_FILE or RANDOM.
        n : Order for ALL_LABELED and RANDOM.
        path : Input file for GRAPH6_FILE.
        fmt : Input format of ``path`` (auto, graph6 or edges).
        count, edge_prob, seed : Sampling parameters for RANDOM.
        checks : Condition ids recorded per graph.
        workers : Pool size; None reads FAN_TILDE_WORKERS, then the CPU count.
        all_conclusions : Decide hamiltonian-connectedness for every graph.
        construct : Run the constructive drivers where a hypothesis holds.
        lemmas : Run the executable lemmas where a hypothesis holds.
        progress : Show a progress bar on stderr.

    """

    source: str
    n: int | None = None
    path: Path | None = None
    fmt: str = "auto"
    count: int = 0
    edge_prob: float = 0.5
    seed: int = 0
    checks: tuple[str, ...] = ALL_CONDITIONS
    workers: int | None = None
    all_conclusions: bool = False
    construct: bool = False
    lemmas: bool = False
    progress: bool = False

    def __post_init__(self):
        if self.source not in SOURCES:
            raise PreconditionError(f"unknown source {self.source!r}, expected one of {', '.join(SOURCES)}")
        if self.source == ALL_LABELED and (self.n is None or not 1 <= self.n <= MAX_LABELED_ORDER):
            raise PreconditionError(f"labelled enumeration needs 1 <= n <= {MAX_LABELED_ORDER}, got {self.n}")
        if self.source == RANDOM and (self.n is None or self.n < 1):
            raise PreconditionError(f"random graphs need an order n >= 1, got {self.n}")
        if self.source == GRAPH6_FILE and self.path is None:
            raise PreconditionError("a file source needs a path")
        object.__setattr__(self, "checks", tuple(dict.fromkeys(normalise_condition_id(c) for c in self.checks)))

    def graphs(self) -> Iterable[Graph]:
        if self.source == ALL_LABELED:
            return enumerate_labeled_graphs(self.n)
        if self.source == RANDOM:
            return random_graphs(self.count, self.n, self.edge_prob, self.seed)
        return graphs_from_file(self.path, self.fmt)

    def size(self) -> int | None:
        if self.source == ALL_LABELED:
            return count_labeled_graphs(self.n)
        if self.source == RANDOM:
            return self.count
        return None


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        raw = os.environ.get(WORKERS_ENV)
        if raw is None:
            return os.cpu_count() or 1
        try:
            workers = int(raw)
        except ValueError:
            raise PreconditionError(f"{WORKERS_ENV}={raw!r} is not an integer") from None
    if workers < 1:
        raise PreconditionError(f"worker count must be at least 1, not {workers}")
    return workers


@dataclasses.dataclass(frozen=True)
class Implication:
    """antecedent => consequent, read off the degree parts of a record."""

    name: str
    antecedent: str
    consequent: str


IMPLICATIONS = (
    Implication("li-liu-ham => fan-tilde", LI_LIU_HAM, FAN_TILDE),
    Implication("li-liu-ham => thm-ham", LI_LIU_HAM, THM_HAM),
    Implication("li-liu-hc => admissible", LI_LIU_HC, ADMISSIBLE),
    Implication("mcdiarmid-yolov => fan-tilde", MCDIARMID_YOLOV, FAN_TILDE),
    Implication("dirac => mcdiarmid-yolov", DIRAC, MCDIARMID_YOLOV),
    Implication("zhou-et-al => admissible", ZHOU_ET_AL, ADMISSIBLE),
)


@dataclasses.dataclass
class ImplicationCount:
    implication: Implication
    antecedent: int = 0
    consequent: int = 0
    exceptions: int = 0
    strict: int = 0
    first_exception: str | None = None
    first_strict: str | None = None

    def add(self, record: VerificationRecord) -> None:
        left = record.degree_conditions[self.implication.antecedent]
        right = record.degree_conditions[self.implication.consequent]
        self.antecedent += left
        self.consequent += right
        if left and not right:
            self.exceptions += 1
            self.first_exception = self.first_exception or record.graph6
        if right and not left:
            self.strict += 1
            self.first_strict = self.first_strict or record.graph6

    @property
    def details(self) -> dict[str, object]:
        return {
            "implication": self.implication.name,
            "antecedent": self.antecedent,
            "consequent": self.consequent,
            "exceptions": self.exceptions,
            "strict": self.strict,
            "first_exception": self.first_exception,
            "first_strict": self.first_strict,
        }


@dataclasses.dataclass
class CorpusSummary:
    """Counts over every record of a run."""

    total: int = 0
    hypotheses: collections.Counter = dataclasses.field(default_factory=collections.Counter)
    hamiltonian: int = 0
    hamiltonian_connected: int = 0
    counterexamples: list[str] = dataclasses.field(default_factory=list)
    unconfirmed: list[str] = dataclasses.field(default_factory=list)
    lemma_violations: int = 0
    fallbacks: collections.Counter = dataclasses.field(default_factory=collections.Counter)
    implications: list[ImplicationCount] = dataclasses.field(default_factory=list)

    @property
    def holds(self) -> bool:
        """No counterexample, no failed lemma and no failed implication."""
        return (
            not self.counterexamples
            and not self.unconfirmed
            and not self.lemma_violations
            and all(count.exceptions == 0 for count in self.implications)
        )

    def add(self, record: VerificationRecord) -> None:
        self.total += 1
        self.hypotheses.update(cid for cid, applies in record.hypotheses.items() if applies)
        self.hamiltonian += record.hamiltonian
        self.hamiltonian_connected += bool(record.hamiltonian_connected)
        self.lemma_violations += len(record.lemma_violations)
        if record.trace_summary:
            if "cycle" in record.trace_summary:
                self.fallbacks["cycle-constructions"] += 1
                self.fallbacks["cycle-fallbacks"] += record.trace_summary["cycle"]["fallback"]
            if "paths" in record.trace_summary:
                self.fallbacks["path-constructions"] += record.trace_summary["paths"]["pairs"]
                self.fallbacks["path-fallbacks"] += record.trace_summary["paths"]["fallbacks"]
            if "error" in record.trace_summary:
                self.fallbacks["errors"] += 1
        for count in self.implications:
            count.add(record)

    @property
    def details(self) -> dict[str, object]:
        return {
            "total": self.total,
            "hypotheses": dict(sorted(self.hypotheses.items())),
            "hamiltonian": self.hamiltonian,
            "hamiltonian_connected": self.hamiltonian_connected,
            "counterexamples": list(self.counterexamples),
            "unconfirmed": list(self.unconfirmed),
            "lemma_violations": self.lemma_violations,
            "constructions": dict(sorted(self.fallbacks.items())),
            "implications": [count.details for count in self.implications],
            "holds": self.holds,
        }


def _evaluate(task: tuple[int, Graph], **options) -> VerificationRecord:
    index, g = task
    return evaluate_graph(g, index=index, **options)


def iter_records(cfg: RunConfig) -> Iterator[VerificationRecord]:
    """Records for every graph of ``cfg``, in corpus order."""
    options = {
        "checks": cfg.checks,
        "all_conclusions": cfg.all_conclusions,
        "construct": cfg.construct,
        "lemmas": cfg.lemmas,
    }
    worker = functools.partial(_evaluate, **options)
    tasks = enumerate(cfg.graphs())
    workers = resolve_workers(cfg.workers)
    _log.info("evaluating %s corpus with %d worker(s)", cfg.source, workers)
    bar = functools.partial(tqdm, total=cfg.size(), unit="graph", file=sys.stderr, disable=not cfg.progress)
    if workers == 1:
        yield from bar(map(worker, tasks))
        return
    with mp.Pool(workers) as pool:
        yield from bar(pool.imap(worker, tasks, chunksize=CHUNK_SIZE))


def _confirm(record: VerificationRecord, cfg: RunConfig) -> bool:
    """Re-evaluate a reported counterexample in this process."""
    again = evaluate_graph(parse_graph6(record.graph6), index=record.index, checks=cfg.checks,
                           all_conclusions=cfg.all_conclusions)
    return again.is_counterexample


def verify_corpus(
    cfg: RunConfig, *, on_record: Callable[[VerificationRecord], None] | None = None
) -> CorpusSummary:
    """Evaluate every graph of ``cfg``; ``on_record`` sees each record in order."""
    summary = CorpusSummary()
    if all(c in cfg.checks for i in IMPLICATIONS for c in (i.antecedent, i.consequent)):
        summary.implications = [ImplicationCount(implication) for implication in IMPLICATIONS]
    for record in iter_records(cfg):
        summary.add(record)
        if record.is_counterexample:
            if _confirm(record, cfg):
                _log.error("counterexample %s (index %d)", record.graph6, record.index)
                summary.counterexamples.append(record.graph6)
            else:
                _log.error("worker reported %s as a counterexample, re-check disagrees", record.graph6)
                summary.unconfirmed.append(record.graph6)
        for problem in record.lemma_violations:
            _log.error("lemma violated on %s: %s", record.graph6, problem)
        if on_record is not None:
            on_record(record)
    return summary


def compare_conditions(cfg: RunConfig) -> CorpusSummary:
    """Implication and strict-containment counts over the corpus of ``cfg``."""
    return verify_corpus(dataclasses.replace(cfg, checks=ALL_CONDITIONS))
