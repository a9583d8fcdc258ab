from fan_tilde.conditions.predicates import ConditionReport
from fan_tilde.conditions.predicates import VStar
from fan_tilde.conditions.predicates import evaluate_condition
from fan_tilde.conditions.predicates import fan_tilde_condition
from fan_tilde.conditions.predicates import induced_is_clique
from fan_tilde.conditions.predicates import is_admissible
from fan_tilde.conditions.predicates import outside_vstar_diagnostic
from fan_tilde.conditions.predicates import prior_condition
from fan_tilde.conditions.predicates import theorem_ham_hypothesis
from fan_tilde.conditions.predicates import theorem_hc_hypothesis
from fan_tilde.conditions.predicates import v_star

__all__ = [
    "ConditionReport",
    "VStar",
    "evaluate_condition",
    "fan_tilde_condition",
    "induced_is_clique",
    "is_admissible",
    "outside_vstar_diagnostic",
    "prior_condition",
    "theorem_ham_hypothesis",
    "theorem_hc_hypothesis",
    "v_star",
]
