"""
Comparing what-if scenarios
===========================

Run the shipped evidence scenarios against the crash model, rank them by
the probability mass they put on a very high severity crash, and render
the full markdown report.
"""

from aerorisk import fixtures
from aerorisk.report import emit_report
from aerorisk.scenario import compare_scenarios, run_scenario

net = fixtures.default_crash_model()

# The causal scenarios clamp groups of contributing factors to present.
names = ("pilot-error", "external-pressure", "internal-degradation")
results = [run_scenario(net, fixtures.default_scenario(name)) for name in names]

for result in results:
    print(f"scenario: {result.name}")
    for state, pre, post, delta in zip(
        result.posterior.states,
        result.prior.probabilities,
        result.posterior.probabilities,
        result.deltas,
    ):
        print(
            f"  {state:<10} {pre * 100:6.3f}% -> {post * 100:6.3f}% "
            f"({delta * 100:+.3f}pp)"
        )
    print()

# Rank the scenarios by posterior mass on the most severe state. Deltas
# against the prior come along for free.
report = compare_scenarios(results, "very high")
print(f"ranking by P({report.target} = {report.state})")
for row in report.rows:
    print(f"  {row.mass * 100:6.3f}%  ({row.delta_vs_prior * 100:+.3f}pp)  {row.name}")

# The same results render as a markdown report, the format the CLI's
# `aerorisk report` command emits.
markdown = emit_report(results=results, registry=fixtures.default_registry())
print("\nreport preview")
print("\n".join(markdown.splitlines()[:8]))
