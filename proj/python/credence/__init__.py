"""Exact subjective-probability toolkit.

Finite Bayesian updating, credence/odds conversion, Dutch-book coherence
checking with machine-checkable certificates, and score-voting panel
aggregation. All values are exact rationals: pass strings ("2/3", "0.48"),
ints, or fractions.Fraction; results come back as fractions.Fraction.
"""

from credence._core import (
    Error,
    addition_rule,
    aggregate_issues,
    aggregate_outcome,
    bayes_posterior,
    bet_payoff,
    binary_baseline,
    check_coherence,
    convergence,
    credence_to_odds,
    embedded_corpus_csv,
    embedded_stream,
    figure_svg,
    multiply_rule,
    odds_to_credence,
    posterior_table,
    published_table,
    table_from_csv,
    update,
    verify_certificate,
)

__all__ = [
    "Error",
    "addition_rule",
    "aggregate_issues",
    "aggregate_outcome",
    "bayes_posterior",
    "bet_payoff",
    "binary_baseline",
    "check_coherence",
    "convergence",
    "credence_to_odds",
    "embedded_corpus_csv",
    "embedded_stream",
    "figure_svg",
    "multiply_rule",
    "odds_to_credence",
    "posterior_table",
    "published_table",
    "table_from_csv",
    "update",
    "verify_certificate",
]

__version__ = "0.1.0"
