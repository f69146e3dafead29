"""Run the pipeline over the checked-in fixtures and a ladder of synthetic
corpora, printing LOC, case counts and wall time per corpus.

    python3 scripts/case_study.py [--sizes 1000 5000 10000] [--repeat 3]
"""

import argparse
import statistics
import tempfile
import time
from pathlib import Path

from epit.cli import RunConfig, analyze
from epit.report import Clock, render_json, render_text
from epit.synth import generate_loc_corpus

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def measure(root: Path, repeat: int):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        model, groups, suite, summary, _ = analyze(RunConfig(root=root, refactor=True), Clock())
        render_text(model, suite, summary, groups=groups)
        render_json(model, suite, summary, groups)
        times.append((time.perf_counter() - t0) * 1000)
    return summary, statistics.median(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", type=int, nargs="*", default=[1000, 2500, 5000, 10000, 20000])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    corpora = [(p.name, p) for p in (FIXTURES / "calendar", FIXTURES / "blackjack") if p.is_dir()]
    with tempfile.TemporaryDirectory() as tmp:
        for size in args.sizes:
            corpora.append((f"synthetic-{size}", generate_loc_corpus(size, args.seed).write(Path(tmp) / str(size))))

        header = f"{'corpus':<18}{'files':>7}{'LOC':>8}{'cases':>8}{'refac':>8}{'opt%':>6}{'ms':>9}"
        print(header)
        print("-" * len(header))
        for name, root in corpora:
            s, ms = measure(root, args.repeat)
            print(
                f"{name:<18}{s.total_files:>7}{s.total_loc:>8}{s.cases_without_refactoring:>8}"
                f"{s.cases_with_refactoring:>8}{s.optimization_percent:>6}{ms:>9.1f}"
            )


if __name__ == "__main__":
    main()
