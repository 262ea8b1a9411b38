"""Profile the pretentious distance of a function as the twist set widens.

For each modulus cutoff Q in a ladder, minimize the Granville-Soundararajan
distance D(f, chi(n) n^{it}; X) over all Dirichlet characters chi of modulus
q <= Q and |t| <= t_max, and print which (chi, t) is closest.  The minimum
is non-increasing in Q (the candidate set only grows).  Functions that
genuinely pretend to be a twist lock onto it with D near 0; Liouville keeps
its distance from every twist.

Example:
    python3 scripts/distance_profile.py --spec "char:3:1:0.5" --X 10000
"""

import argparse
import sys
import time

from expsumlab import FunctionSpec, emit_csv, pretentious_distance

from uniformity_decay import parse_spec as parse_plain_spec


def parse_spec(text):
    # char:q:index:t adds an archimedean twist on top of the plain names.
    if text.startswith("char:"):
        parts = text.split(":")
        if len(parts) == 4:
            return FunctionSpec.char_twist(int(parts[1]), int(parts[2]),
                                           t=float(parts[3]))
    return parse_plain_spec(text)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--spec", default="liouville",
                    help="liouville, moebius, one, archimedean:T, "
                         "char:q:index[:t], random:seed")
    ap.add_argument("--X", type=int, default=10_000,
                    help="the distance sums over primes p <= X")
    ap.add_argument("--Q", type=int, action="append", default=None,
                    dest="q_ladder", help="repeatable modulus cutoff ladder "
                    "(default 1, 3, 5)")
    ap.add_argument("--t-max", type=float, default=10.0)
    ap.add_argument("--tol", type=float, default=0.01)
    ap.add_argument("--out", default=None, help="CSV path (default stdout)")
    args = ap.parse_args(argv)

    spec = parse_spec(args.spec)
    ladder = sorted(set(args.q_ladder or [1, 3, 5]))

    rows = []
    for Q in ladder:
        t0 = time.perf_counter()
        res = pretentious_distance(spec, args.X, Q, args.t_max, tol=args.tol)
        dt = time.perf_counter() - t0
        rows.append(res.csv_row())
        print(f"# Q={Q:4d}  D={res.distance:.4f}  nearest twist: "
              f"chi mod {res.argmin_q} (index {res.argmin_index}), "
              f"t={res.argmin_t:+.3f}  ({dt:.1f}s)", file=sys.stderr)

    header = "spec,X,Q,t_max,tol,D,argmin_t,argmin_q,argmin_index"
    emit_csv(header, rows, out=args.out,
             meta_extra={"script": "distance_profile"})
    if args.out:
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()
