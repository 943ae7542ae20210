# Copyright 2026 The schurkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Runs every CLI subcommand with --format json and validates the output.

Usage: validate_schemas.py CLI SCHEMA_DIR
"""

import csv
import io
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
import referencing

# (schema, argv) pairs; argv excludes --format.
CASES = [
    ("dims", ["dims", "--d", "3", "--n", "4"]),
    ("kostka", ["kostka", "--lambda", "3,1", "--d", "3", "--mu", "2,1,1"]),
    ("matrix_document", ["schur", "--d", "2", "--n", "3"]),
    ("matrix_document", ["cg", "--lambda", "2,1", "--d", "3"]),
    ("verify", ["verify", "--d", "2", "--n", "4", "--trials", "20", "--seed", "7"]),
    ("rho", ["rho", "--n", "3", "--r", "0.6,0.3,0.1"]),
    ("spectrum", ["spectrum", "--r", "0.7,0.3", "--n", "16", "--trials", "2000", "--seed", "3"]),
    ("concentrate", ["concentrate", "--n", "3", "--seed", "5", "--trials", "50"]),
    ("compress", ["compress", "--r", "0.9,0.1", "--n", "40", "--rate", "0.8"]),
    ("typebounds", ["typebounds", "--r", "0.8,0.2", "--n", "10"]),
    ("qft", ["qft", "--n", "3"]),
    ("qft", ["qft", "--n", "3", "--explicit", "--matrix"]),
    ("gpe", ["gpe", "--d", "2", "--n", "3", "--seed", "11"]),
    ("channel", ["channel", "--dephasing", "0.25", "--n", "2"]),
    ("channel", ["channel", "--dephasing", "0.25", "--n", "3", "--eps", "0.05"]),
]


def load_registry(schema_dir):
    resources = []
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        schemas[path.name.removesuffix(".schema.json")] = doc
        resources.append((path.name, referencing.Resource.from_contents(doc)))
        resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
    return schemas, referencing.Registry().with_resources(resources)


def run(cli, argv):
    proc = subprocess.run([cli, *argv], capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        raise AssertionError(f"{argv}: exit {proc.returncode}: {proc.stderr}")
    return proc.stdout


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas, registry = load_registry(schema_dir)
    failures = 0
    for name, argv in CASES:
        validator = jsonschema.Draft202012Validator(schemas[name], registry=registry)
        try:
            first = run(cli, [*argv, "--format", "json"])
            second = run(cli, [*argv, "--format", "json"])
            if first != second:
                raise AssertionError("output is not deterministic")
            errors = sorted(validator.iter_errors(json.loads(first)), key=str)
            if errors:
                raise AssertionError(errors[0].message)
            rows = list(csv.reader(io.StringIO(run(cli, [*argv, "--format", "csv"]))))
            if not rows or any(len(r) != len(rows[0]) for r in rows):
                raise AssertionError("ragged csv")
            print(f"ok    {name:16s} {' '.join(argv)}")
        except AssertionError as exc:
            failures += 1
            print(f"FAIL  {name:16s} {' '.join(argv)}: {exc}")

    # Input documents: a state file and a channel spec written from CLI output.
    with tempfile.TemporaryDirectory() as tmp:
        spec_path = pathlib.Path(tmp) / "spec.json"
        iso = json.loads(run(cli, ["schur", "--d", "2", "--n", "1", "--format", "json"]))
        spec = {"d_a": 2, "d_b": 2, "d_e": 1, "isometry": iso}
        jsonschema.Draft202012Validator(schemas["channel_spec"], registry=registry).validate(spec)
        spec_path.write_text(json.dumps(spec))
        out = json.loads(run(cli, ["channel", "--spec", str(spec_path), "--n", "2", "--format", "json"]))
        jsonschema.Draft202012Validator(schemas["channel"], registry=registry).validate(out)
        print("ok    channel_spec     round trip")

    print(f"{failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
