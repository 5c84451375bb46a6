#!/usr/bin/env python3
"""Run the exhaustive verifier and print a timing table.

Thin wrapper over partgraph.oracle.run_all for quick command line sweeps
while hacking on the closed forms; the `partgraph verify` subcommand emits
the same data as JSON.
"""

import argparse
import json

from partgraph.oracle import run_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nmax", type=int, default=12, help="largest weight to sweep")
    parser.add_argument("--degrees-only", action="store_true",
                        help="only compare neighbor counts against the degree formula")
    parser.add_argument("--json", action="store_true", help="emit the raw report instead")
    args = parser.parse_args()

    report = run_all(args.nmax, degrees_only=args.degrees_only)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
        return 0 if report.passed else 1

    print(f"weights 1..{args.nmax}")
    for check in report.checks:
        status = "ok" if check.passed else f"{len(check.failures)} FAILURES"
        print(f"  {check.name:<18} examined {check.examined:>6}  {check.ms:9.1f} ms  {status}")
        for failure in check.failures:
            print(f"    {failure['partition']} (weight {failure['n']}): {failure['detail']}")
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
