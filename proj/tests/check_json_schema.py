"""Validate every --format json output of the CLI against the shipped schema."""

import json
import subprocess
import sys

import jsonschema

BEAMS = """location_id,frequency_ghz,environment,scenario,tx_height_m,rx_height_m,distance_m,beam_index,received_power_mw,tx_power_dbm,tx_gain_dbi,rx_gain_dbi
L1,28,urban,NLOS,7,1.5,60,0,1e-9,30,24.5,24.5
L1,28,urban,NLOS,7,1.5,60,1,4e-10,30,24.5,24.5
L2,28,urban,NLOS,7,1.5,140,0,1e-10,30,24.5,24.5
L2,28,urban,NLOS,7,1.5,140,1,3e-11,30,24.5,24.5
"""

INVOCATIONS = [
    (["pathloss", "--model", "ci", "--freq-ghz", "73", "--ple", "4.4", "--distance-m", "1,100"], None),
    (["pathloss", "--model", "bc-ci", "--freq-ghz", "28", "--n-single", "3", "--a-weight", "0.2",
      "--beams", "8", "--distance-m", "10"], None),
    (["sigma", "--residuals-db", "3,-3"], None),
    (["tables"], None),
    (["range", "--freq-ghz", "73", "--ple", "3.226", "--target-loss-of", "--ple-ref", "3.728",
      "--at-m", "100"], None),
    (["plot-data", "--figure", "7", "--resolution", "3"], None),
    (["fit-bc", "--input", "-", "--scheme", "ncc", "--max-beams", "2"], BEAMS),
]


def main(binary, schema_path):
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    synth = subprocess.run(
        [binary, "synth", "--freq-ghz", "60", "--ple", "3.6", "--sigma-db", "9", "--seed", "3",
         "--d-min-m", "29", "--d-max-m", "129", "--count", "12"],
        check=True, capture_output=True, text=True).stdout
    runs = INVOCATIONS + [
        (["synth", "--freq-ghz", "60", "--ple", "3.6", "--distances-m", "10,20"], None),
        (["fit-ci", "--input", "-"], synth),
        (["fit-alpha", "--input", "-", "--base", "sui", "--terrain", "B"], synth),
    ]
    failures = 0
    for args, stdin in runs:
        proc = subprocess.run([binary, *args, "--format", "json"], input=stdin or "",
                              capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {' '.join(args)}: {e.message} at {list(e.absolute_path)}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
