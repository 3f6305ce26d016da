"""Run every golden CLI case and validate its JSON report against the schema."""
import json
import os
import subprocess
import sys

import jsonschema


def main():
    exe, schema_path, samples = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    cases = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden", "cases.tsv")
    failures = 0
    count = 0
    for line in open(cases):
        if not line.strip() or line.startswith("#"):
            continue
        name, code, args = line.rstrip("\n").split("\t")
        for extra in ([], ["--timing"]):
            proc = subprocess.run([exe] + args.split() + extra, cwd=samples, capture_output=True, text=True)
            if proc.returncode != int(code):
                print(f"{name}: exit {proc.returncode}, expected {code}: {proc.stderr.strip()}")
                failures += 1
                continue
            errors = list(validator.iter_errors(json.loads(proc.stdout)))
            for e in errors:
                print(f"{name}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
            failures += bool(errors)
            count += 1
    print(f"{count} reports validated, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
