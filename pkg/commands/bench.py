import csv
import logging
import sys
import time
from typing import Iterable, List, Optional, TextIO, Tuple

from pydantic import BaseModel
from tqdm import tqdm

from commands.output import add_budget_flags
from core.dependencies import count_targets, iter_targets, parse_targets, resolve_budget
from core.errors import EXIT_BUDGET, EXIT_DISAGREEMENT, EXIT_OK, BudgetExhausted
from core.settings import settings
from factoring.factorizer import factorize
from factoring.numcore import Natural
from factoring.oracle import trial_division_run

logger = logging.getLogger(__name__)

BENCH_HEADER = ["n", "fermat_candidates", "fermat_time_ns", "trial_divisions", "trial_time_ns", "agree"]


# ============== MODELS ==============

class BenchRecord(BaseModel):
    """An unresolved target keeps its row with every measured field empty."""
    n: Natural
    fermat_candidates: Optional[int] = None
    fermat_time_ns: Optional[int] = None
    trial_divisions: Optional[int] = None
    trial_time_ns: Optional[int] = None
    agree: Optional[bool] = None

    @property
    def unresolved(self) -> bool:
        return self.agree is None

    def as_row(self) -> List[str]:
        fields = [self.fermat_candidates, self.fermat_time_ns, self.trial_divisions, self.trial_time_ns]
        row = [str(self.n)] + ["" if value is None else str(value) for value in fields]
        if self.agree is None:
            row.append("")
        else:
            row.append("true" if self.agree else "false")
        return row


# ============== HELPER FUNCTIONS ==============

def run_target(n: int, budget) -> BenchRecord:
    """Factorize n with the Fermat pipeline and the trial-division oracle, timing both."""
    start = time.perf_counter_ns()
    try:
        fermat = factorize(n, budget=budget)
    except BudgetExhausted as exc:
        # no oracle run: the whole row stays empty
        logger.warning("bench target %s unresolved: %s", n, exc.detail)
        return BenchRecord(n=n)
    fermat_time = time.perf_counter_ns() - start

    start = time.perf_counter_ns()
    oracle = trial_division_run(n)
    trial_time = time.perf_counter_ns() - start

    return BenchRecord(
        n=n,
        fermat_candidates=fermat.stats.candidates_tested,
        fermat_time_ns=fermat_time,
        trial_divisions=oracle.divisions,
        trial_time_ns=trial_time,
        agree=fermat.as_pairs() == oracle.factorization.as_pairs(),
    )


def write_records(handle: TextIO, records: Iterable[BenchRecord]) -> Tuple[int, int]:
    """
    Stream one CSV row per record as it is produced.
    Returns (disagreements, unresolved).
    """
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(BENCH_HEADER)

    disagreements = 0
    unresolved = 0
    for record in records:
        writer.writerow(record.as_row())
        if record.unresolved:
            unresolved += 1
        elif not record.agree:
            disagreements += 1
            logger.error("bench target %s: Fermat pipeline and trial division disagree", record.n)
    return disagreements, unresolved


# ============== COMMAND ==============

def cmd_bench(args) -> int:
    """BENCH - Fermat pipeline against trial division, one CSV row per target"""
    ranges = parse_targets(args.targets)
    budget = resolve_budget(args.budget, args.unbounded)
    out = args.out or settings.bench.default_out

    # disable=None hides the bar when stderr is not a terminal
    progress = tqdm(
        iter_targets(ranges),
        total=count_targets(ranges),
        unit="n",
        file=sys.stderr,
        disable=None if settings.bench.progress else True,
    )
    records = (run_target(n, budget) for n in progress)

    if out:
        with open(out, "w", newline="") as handle:
            disagreements, exhausted = write_records(handle, records)
        logger.info("wrote bench records to %s", out)
    else:
        disagreements, exhausted = write_records(sys.stdout, records)

    if disagreements:
        sys.stderr.write(f"bench: {disagreements} target(s) disagree with trial division\n")
        return EXIT_DISAGREEMENT
    if exhausted:
        sys.stderr.write(f"bench: {exhausted} target(s) exhausted the budget\n")
        return EXIT_BUDGET

    return EXIT_OK


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "bench", parents=parents,
        help="benchmark against trial division",
        description="One CSV row per target. A target that exhausts the budget keeps its row "
                    "with the measured fields empty, and the run exits 2.",
    )
    parser.add_argument("targets", nargs="+", help="N, A..B, 'A..B odd' or 'A..B even'; comma lists allowed")
    add_budget_flags(parser)
    parser.add_argument("--out", default=None, help="CSV path (default: stdout)")
    parser.set_defaults(handler=cmd_bench)
