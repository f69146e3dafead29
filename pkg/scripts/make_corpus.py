"""Write a synthetic Java corpus to disk.

    python3 scripts/make_corpus.py OUT --loc 10000 --seed 3
    python3 scripts/make_corpus.py OUT --clones 50 --level 2
"""

import argparse
import sys
from pathlib import Path

from epit.synth import generate_clone_corpus, generate_loc_corpus, generate_project


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("out", type=Path)
    ap.add_argument("--seed", type=int, default=0)
    mode = ap.add_mutually_exclusive_group()
    mode.add_argument("--loc", type=int, help="grow the corpus to at least this many lines")
    mode.add_argument("--clones", type=int, metavar="N", help="flat corpus of N methods with injected clones")
    ap.add_argument("--level", type=int, choices=(1, 2, 3), default=1, help="clone kind to inject (3 mixes both)")
    ap.add_argument("--clone-rate", type=float, default=0.3)
    args = ap.parse_args(argv)

    if args.out.exists() and any(args.out.iterdir()):
        ap.error(f"{args.out} exists and is not empty")
    if args.loc:
        proj = generate_loc_corpus(args.loc, args.seed)
    elif args.clones:
        proj, injected = generate_clone_corpus(args.seed, args.clones, args.clone_rate, args.level)
        print(f"injected copies: {len(injected)}", file=sys.stderr)
    else:
        proj = generate_project(args.seed)
    proj.write(args.out)
    print(f"{len(proj.files)} files, {proj.total_loc} LOC, {proj.eligible_methods} eligible methods -> {args.out}")


if __name__ == "__main__":
    main()
