from __future__ import annotations

import json
import sys
import threading
import urllib.error
import urllib.request

import pytest

sys.path.insert(0, str(__import__("pathlib").Path(__file__).parent))

from nncost import (
    ActivationKind,
    Conv2D,
    Dense,
    NetworkSpec,
    Pool2D,
    TensorShape,
)
from nncost.service import make_server


def worked_example(activation: ActivationKind = ActivationKind.RELU) -> NetworkSpec:
    """The three-layer example built programmatically (independent of the zoo)."""
    return NetworkSpec(
        name="worked-example-3layer",
        input_shape=TensorShape(100, 100, 3),
        layers=(
            Conv2D(
                kernel_rows=3, kernel_cols=3,
                stride_rows=1, stride_cols=1,
                pad_rows=1, pad_cols=1,
                num_filters=1, use_bias=True, activation=activation,
            ),
            Pool2D(kernel_rows=2, kernel_cols=2, stride_rows=2, stride_cols=2),
            Dense(output_size=4, use_bias=True, activation=ActivationKind.NONE),
        ),
    )


class ServiceClient:
    def __init__(self, base_url: str):
        self.base_url = base_url

    def get(self, path: str) -> tuple[int, bytes]:
        try:
            with urllib.request.urlopen(self.base_url + path) as response:
                return response.status, response.read()
        except urllib.error.HTTPError as err:
            return err.code, err.read()

    def post(self, path: str, obj: object, content_type: str = "application/json") -> tuple[int, bytes]:
        request = urllib.request.Request(
            self.base_url + path,
            data=json.dumps(obj).encode("utf-8"),
            headers={"Content-Type": content_type},
            method="POST",
        )
        try:
            with urllib.request.urlopen(request) as response:
                return response.status, response.read()
        except urllib.error.HTTPError as err:
            return err.code, err.read()

    def post_raw(self, path: str, data: bytes, content_type: str = "application/json") -> tuple[int, bytes]:
        request = urllib.request.Request(
            self.base_url + path,
            data=data,
            headers={"Content-Type": content_type},
            method="POST",
        )
        try:
            with urllib.request.urlopen(request) as response:
                return response.status, response.read()
        except urllib.error.HTTPError as err:
            return err.code, err.read()


@pytest.fixture(scope="session")
def service() -> ServiceClient:
    server = make_server(port=0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        yield ServiceClient(f"http://127.0.0.1:{port}")
    finally:
        server.shutdown()
        server.server_close()
