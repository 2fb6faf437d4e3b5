"""
Arbitrage as an insuperable trading strategy
============================================

In a one-period market with no short selling, the trader's no-downside
portfolios are exactly the insuperable strategies of a game on the cash
flow matrix.  The market is arbitrage-free precisely when every such
portfolio has a trivial outcome (zero cash flow in every state) and none
of them has negative cost.
"""

from insuperable import (
    OnePeriodMarket,
    find_arbitrage,
    find_state_price_vector,
    trivial_outcome_check,
)

examples = [
    ("negatively priced asset", OnePeriodMarket([[1, 2]], [-1])),
    ("identical assets, different prices", OnePeriodMarket([[1, 1], [1, 1]], [1, 2])),
    ("fair coin-flip pair", OnePeriodMarket([[1, -1], [-1, 1]], [0, 0])),
    ("identity market", OnePeriodMarket([[1, 0], [0, 1]], [1, 1])),
    ("zero cash flow, negative price", OnePeriodMarket([[0]], [-1])),
]

for label, market in examples:
    spv = find_state_price_vector(market)
    found = find_arbitrage(market)
    report = trivial_outcome_check(market)
    print(f"{label}: D={[[str(v) for v in r] for r in market.D]}, "
          f"p={[str(v) for v in market.p]}")
    print("  state price vector:",
          [str(v) for v in spv.pi] if spv else "none (unconstrained arbitrage possible)")
    if found:
        theta, kind = found
        print(f"  conical arbitrage: theta={[str(v) for v in theta.theta]} ({kind})")
    else:
        print("  conical arbitrage: none")
    print(f"  insuperable-strategy route: all outcomes trivial = "
          f"{report.all_insuperable_trivial}, verdict no-arbitrage = "
          f"{report.verdict_no_arbitrage}")
    print()

print("Note the last example: every no-downside portfolio pays zero (trivial),")
print("yet holding the worthless asset at a negative price is still an")
print("arbitrage -- the verdict needs the price-side conditions, which hold")
print("automatically for structured prices of the form p = -D y.")
