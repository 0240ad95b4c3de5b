#!/usr/bin/env python3
"""End-to-end checks of the command-line binary: output and exit codes."""

import subprocess
import sys
import tempfile
import os

BIN = sys.argv[1]
failures = []


def run(*args, stdin=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, input=stdin)


def check(name, cond, extra=""):
    status = "ok" if cond else "FAIL"
    print(f"{status} {name}{(' ' + extra) if extra and not cond else ''}")
    if not cond:
        failures.append(name)


# stabilize
r = run("stabilize", "--line", "--config", "0:5")
check("stabilize exit", r.returncode == 0, repr(r))
check("stabilize final", "final 11_1_11" in r.stdout, r.stdout)
check("stabilize odometer", "odometer -1:1 0:3 1:1" in r.stdout, r.stdout)
check("stabilize moves", "moves 5" in r.stdout, r.stdout)

r2 = run("stabilize", "--line", "--config", "0:5", "--policy", "random", "--seed", "9")
check("stabilize policy independent", r2.stdout == r.stdout)

# config-poset
r = run("config-poset", "--line", "--config", "0:5")
check("config-poset exit", r.returncode == 0)
check("config-poset size", "elements 9 covers 11" in r.stdout, r.stdout)
check("config-poset lists root", "_5_\n" in r.stdout)

r = run("config-poset", "--line", "--config", "0:5", "--format", "dot")
check("config-poset dot", r.stdout.startswith("digraph poset {"), r.stdout[:40])

# deterministic output
r2 = run("config-poset", "--line", "--config", "0:5", "--format", "dot")
check("dot deterministic", r.stdout == r2.stdout)

# move-poset with the brute-force oracle
r = run("move-poset", "--line", "--config", "0:5", "--oracle")
check("move-poset exit", r.returncode == 0, r.stdout + r.stderr)
check("move-poset size", "elements 5 covers 4" in r.stdout, r.stdout)
check("move-poset oracle", "agreement yes" in r.stdout, r.stdout)

# join-irreducibles
r = run("join-irreducibles", "--line", "--config", "0:5")
got = set(r.stdout.split())
check("join-irreducibles", got == {"_5_", "1_3_1", "10_3_01", "11_0_3", "3_0_11"}, r.stdout)

# check subcommand: verdicts drive the exit code
r = run("check", "--distributive", "--line", "--config", "0:6")
check("check distributive true", r.returncode == 0 and "distributive: true" in r.stdout)
r = run("check", "--distributive", "--line", "--config", "0:5")
check("check distributive false", r.returncode == 1 and "distributive: false" in r.stdout)
check("check witness shown", "witness:" in r.stdout, r.stdout)
r = run("check", "--lattice", "--line", "--config", "0:5")
check("check lattice", r.returncode == 0 and "lattice: true" in r.stdout)
r = run("check", "--uld", "--line", "--config", "0:5")
check("check uld", r.returncode == 0 and "uld: true" in r.stdout)

# verify subcommands
r = run("verify", "join-theorem", "--line", "--config", "0:6")
check("verify join-theorem", r.returncode == 0, r.stdout + r.stderr)
r = run("verify", "endgame", "--m-max", "3")
check("verify endgame", r.returncode == 0, r.stdout + r.stderr)

# repro transcripts
r = run("repro", "counterexample", "--n", "5")
check("repro counterexample exit", r.returncode == 0)
check("repro counterexample x", "10_3_01" in r.stdout, r.stdout)
check("repro counterexample rhs", "11_1_11" in r.stdout, r.stdout)
r = run("repro", "counterexample", "--n", "8")
check("repro counterexample 8", r.returncode == 0 and "21_1_31" in r.stdout, r.stdout)
r = run("repro", "invalid-extension", "--n", "5")
check("repro invalid-extension", r.returncode == 0, r.stdout + r.stderr)

# labeled runs
r = run("labeled-run", "--n", "6", "--seed", "3")
check("labeled-run", r.returncode == 0 and "sorted: true" in r.stdout, r.stdout)

# graph files
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "g.graph")
    with open(path, "w") as f:
        f.write("graph 3\nedge 0 1 1\nedge 1 2 1\nsink 2\n")
    r = run("stabilize", "--graph", path, "--config", "1:2")
    check("graph stabilize", r.returncode == 0 and "final" in r.stdout, r.stdout + r.stderr)

    bad = os.path.join(tmp, "bad.graph")
    with open(bad, "w") as f:
        f.write("graph 2\nedge 0 7 1\n")
    r = run("stabilize", "--graph", bad, "--config", "0:1")
    check("bad graph file exit 2", r.returncode == 2, str(r.returncode))

# usage and parse errors exit 2
check("no args", run().returncode == 2)
check("unknown subcommand", run("frobnicate").returncode == 2)
check("missing config", run("stabilize", "--line").returncode == 2)
check("bad config text", run("stabilize", "--line", "--config", "0:-2").returncode == 2)
check("bad repro n", run("repro", "counterexample", "--n", "6").returncode == 2)
check("help exits 0", run("--help").returncode == 0)

if failures:
    print(f"{len(failures)} cli check(s) failed: {failures}")
    sys.exit(1)
print("all cli checks passed")
