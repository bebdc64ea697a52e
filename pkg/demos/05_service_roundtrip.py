#!/usr/bin/env python3
"""Drive the JSON HTTP service end to end from Python.

Starts the service on a free loopback port, loads a model from the zoo
endpoint, analyzes it with custom training parameters, and fetches a
carbon curve — the same flow the web calculator uses.
"""

import json
import threading
import urllib.request

from nncost.service import make_server

server = make_server(port=0)
port = server.server_address[1]
threading.Thread(target=server.serve_forever, daemon=True).start()
base = f"http://127.0.0.1:{port}/api/v1"
print(f"service on {base}")


def get(path):
    with urllib.request.urlopen(base + path) as response:
        return json.loads(response.read())


def post(path, body):
    request = urllib.request.Request(
        base + path,
        data=json.dumps(body).encode(),
        headers={"Content-Type": "application/json"},
    )
    with urllib.request.urlopen(request) as response:
        return json.loads(response.read())


print("health:", get("/health"))

zoo = get("/zoo")["entries"]
print("zoo entries:", [entry["id"] for entry in zoo])

document = next(e["document"] for e in zoo if e["id"] == "worked-example-3layer")
report = post(
    "/analyze",
    {
        "network": {"document": document},
        "hardware": "nvidia-a100",
        "training": {"training_samples": 10_000, "epochs": 100},
        "intensity": {"grams_co2eq_per_kwh": 250.0, "region_label": "US West Coast"},
    },
)
print(f"total FLOPs: {report['cost']['total_flops']}")
print(f"training energy: {report['energy']['e_training_j']:.4f} J")
print(f"training carbon: {report['carbon']['training_g']:.3e} g")

curve = post(
    "/curve",
    {
        "network": {"zoo": "worked-example-3layer"},
        "range": {"start": 1, "end": 7_400_000_000, "points": 6},
    },
)
for point in curve["curve"]:
    marker = f"  <- {point['marker']}" if point.get("marker") else ""
    print(f"  {point['predictions']:>12} predictions: {point['grams']:.3e} g{marker}")

server.shutdown()
server.server_close()
