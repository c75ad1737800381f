"""Validates every corpus document, in every job, against docs/result.schema.json."""
import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, corpus, schema_path = sys.argv[1:4]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    count = 0
    doc_ok = None
    specs = sorted(pathlib.Path(corpus).glob("*.frob"))
    runs = [[cli, "--no-cache", "run", str(s)] for s in specs]
    runs.append([cli, "--no-cache", "--timing", "run", str(specs[0])])
    for cmd in runs:
        out = subprocess.run(cmd, capture_output=True, text=True, check=False)
        for doc in json.loads(out.stdout):
            count += 1
            if doc.get("status") == "ok":
                doc_ok = doc
            for err in validator.iter_errors(doc):
                failures += 1
                name = doc.get("job", {}).get("name", "?")
                print(f"{cmd[-1]} job {name}: {err.json_path}: {err.message[:200]}")
    bad = pathlib.Path(corpus).parent / "schema" / "bad_spec.frob"
    out = subprocess.run([cli, "run", str(bad)], capture_output=True, text=True, check=False)
    doc = json.loads(out.stdout)
    count += 1
    for err in validator.iter_errors(doc):
        failures += 1
        print(f"parse error document: {err.json_path}: {err.message[:200]}")
    # The schema must reject a JSON number and an unknown status.
    for mutate in (lambda d: d.update(seed=7), lambda d: d.update(status="fine")):
        probe = json.loads(json.dumps(doc_ok))
        mutate(probe)
        if validator.is_valid(probe):
            failures += 1
            print("schema accepted a malformed document")
    print(f"{count} documents, {failures} schema violations")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
