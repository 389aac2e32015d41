#!/usr/bin/env python3
# Copyright 2026 The reqviz Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Builds the case-study project with the CLI and validates every emitted
visualization model and chart document against the published schemas."""

import argparse
import json
import pathlib
import shutil
import subprocess
import sys

import jsonschema


def run(reqviz, *args, ok=(0,)):
    proc = subprocess.run([reqviz, *args], capture_output=True, text=True)
    if proc.returncode not in ok:
        sys.exit(f"reqviz {' '.join(args)} exited {proc.returncode}\n{proc.stdout}{proc.stderr}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reqviz", required=True)
    ap.add_argument("--data", required=True, type=pathlib.Path)
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    ap.add_argument("--work", required=True, type=pathlib.Path)
    args = ap.parse_args()

    shutil.rmtree(args.work, ignore_errors=True)
    args.work.mkdir(parents=True)
    cs = args.data / "case_study"
    run(args.reqviz, "init", "--goals", str(cs / "tax_collection.goals"),
        "--data", str(cs / "unpaid_bills.csv"), str(cs / "unpaid_detail.csv"),
        "--root", str(args.work))
    project = args.work / "tax-collection"
    # The place visualization fails at codegen; the rest must succeed.
    run(args.reqviz, "derive", "-p", str(project), "--all", ok=(0, 1))
    run(args.reqviz, "refine", "-p", str(project), "--vis", "unpaid-bills-by-type",
        "--ops", str(cs / "refinements.json"))

    checks = [("vismodel.schema.json", sorted((project / "models").glob("*.vismodel.json"))),
              ("vismodel.schema.json", sorted((project / "models" / "snapshots").glob("*.json"))),
              ("chartdoc.schema.json", sorted((project / "out").glob("*.chartdoc.json"))),
              ("chartdoc.schema.json", [args.data / "golden" / "unpaid-bills-by-type.chartdoc.json"])]
    count = 0
    for schema_name, files in checks:
        schema = json.loads((args.schemas / schema_name).read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        validator = jsonschema.Draft202012Validator(schema)
        for f in files:
            errors = sorted(validator.iter_errors(json.loads(f.read_text())), key=str)
            if errors:
                sys.exit(f"{f}: {errors[0].message} at {list(errors[0].absolute_path)}")
            count += 1
    if count < 7:
        sys.exit(f"only {count} documents validated")

    # Negative control: the schema must reject an unknown top-level key.
    doc = json.loads((args.data / "golden" / "unpaid-bills-by-type.chartdoc.json").read_text())
    doc["surprise"] = 1
    schema = json.loads((args.schemas / "chartdoc.schema.json").read_text())
    if jsonschema.Draft202012Validator(schema).is_valid(doc):
        sys.exit("schema accepted an unknown key")
    print(f"{count} documents valid")


if __name__ == "__main__":
    main()
