from fan_tilde.harness.corpus import RunConfig
from fan_tilde.harness.corpus import compare_conditions
from fan_tilde.harness.corpus import iter_records
from fan_tilde.harness.corpus import verify_corpus
from fan_tilde.harness.enumeration import enumerate_labeled_graphs
from fan_tilde.harness.enumeration import random_graphs
from fan_tilde.harness.records import VerificationRecord
from fan_tilde.harness.records import evaluate_graph

__all__ = [
    "RunConfig",
    "VerificationRecord",
    "compare_conditions",
    "enumerate_labeled_graphs",
    "evaluate_graph",
    "iter_records",
    "random_graphs",
    "verify_corpus",
]
