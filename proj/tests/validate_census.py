"""Runs the CLI over a spread of census requests and validates every report
against census.schema.json.  Also checks that repeated runs are identical."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ["--family", "penta", "--splitting", "odd", "--budget", "100"],
    ["--family", "penta", "--splitting", "even"],
    ["--family", "hepta", "--splitting", "odd", "--budget", "1" + "0" * 50],
    ["--family", "penta", "--splitting", "odd_r", "-r", "2", "--budget", "100000"],
    ["--family", "hepta", "--splitting", "odd_r", "-r", "1"],
    ["--family", "p4", "-p", "9", "--splitting", "odd", "--budget", "1"],
    ["--family", "p23", "-p", "6", "--splitting", "even", "--budget", "777"],
    ["--family", "pq_even", "-p", "5", "-q", "6", "--splitting", "even", "--budget", "1000"],
    ["--family", "pq_odd_v1", "-p", "7", "-q", "9", "--splitting", "odd", "--mode", "symbolic"],
    ["--family", "pq_odd_v2", "-p", "5", "-q", "5", "--splitting", "even", "--budget", "1000"],
]


def main() -> int:
    cli = sys.argv[1]
    schema = json.loads((pathlib.Path(__file__).parent / "census.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    for args in CASES:
        runs = [subprocess.run([cli, "census", *args], capture_output=True, text=True, check=True).stdout
                for _ in range(2)]
        if runs[0] != runs[1]:
            print("non-deterministic output for", args)
            return 1
        errors = list(validator.iter_errors(json.loads(runs[0])))
        if errors:
            print("schema violation for", args, ":", errors[0].message)
            return 1
        print("ok", " ".join(args))
    return 0


if __name__ == "__main__":
    sys.exit(main())
