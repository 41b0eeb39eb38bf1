import json
import threading
import urllib.error
import urllib.request

import pytest

from qgrass.service import make_server


@pytest.fixture(scope="module")
def server_port():
    server = make_server(port=0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield port
    server.shutdown()
    server.server_close()


def request(port, method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(
        f"http://127.0.0.1:{port}{path}", data=data, method=method
    )
    if data:
        req.add_header("Content-Type", "application/json")
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, json.loads(resp.read())
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read())


def create_session(port, m=2, n=4):
    status, payload = request(port, "POST", "/sessions", {"m": m, "n": n})
    assert status == 201
    return payload["id"], payload["seed"]


class TestSessionLifecycle:
    def test_create(self, server_port):
        sid, seed = create_session(server_port)
        assert seed["positions"][0]["label"] == [1, 3]
        assert seed["history"] == []

    def test_info(self, server_port):
        sid, _ = create_session(server_port)
        status, payload = request(server_port, "GET", f"/sessions/{sid}")
        assert status == 200
        assert payload["mutablePositions"] == [1]
        assert sorted(payload["arrows"]) == [[1, 2], [1, 4], [3, 1], [5, 1]]

    def test_unknown_session(self, server_port):
        status, _ = request(server_port, "GET", "/sessions/feedface")
        assert status == 404

    def test_bad_params(self, server_port):
        status, _ = request(server_port, "POST", "/sessions", {"m": 4, "n": 4})
        assert status == 400


class TestMutation:
    def test_geometric_exchange(self, server_port):
        sid, _ = create_session(server_port)
        status, payload = request(
            server_port, "POST", f"/sessions/{sid}/mutate", {"position": 1}
        )
        assert status == 200
        assert payload["geometricExchange"] is True
        assert payload["newLabel"] == [2, 4]
        assert payload["seed"]["history"] == [1]

    def test_involution_roundtrip(self, server_port):
        sid, original = create_session(server_port)
        request(server_port, "POST", f"/sessions/{sid}/mutate", {"position": 1})
        status, payload = request(
            server_port, "POST", f"/sessions/{sid}/mutate", {"position": 1}
        )
        assert status == 200
        restored = payload["seed"]
        for key in ("positions", "B", "L"):
            assert restored[key] == original[key]

    def test_frozen_rejected(self, server_port):
        sid, _ = create_session(server_port)
        status, _ = request(
            server_port, "POST", f"/sessions/{sid}/mutate", {"position": 2}
        )
        assert status == 422

    def test_unknown_position(self, server_port):
        sid, _ = create_session(server_port)
        status, _ = request(
            server_port, "POST", f"/sessions/{sid}/mutate", {"position": 99}
        )
        assert status == 404


class TestUndo:
    def test_undo_restores(self, server_port):
        sid, original = create_session(server_port)
        request(server_port, "POST", f"/sessions/{sid}/mutate", {"position": 1})
        status, payload = request(server_port, "POST", f"/sessions/{sid}/undo")
        assert status == 200
        assert payload["seed"]["positions"] == original["positions"]

    def test_underflow(self, server_port):
        sid, _ = create_session(server_port)
        status, _ = request(server_port, "POST", f"/sessions/{sid}/undo")
        assert status == 409


class TestVariablesAndLambda:
    def test_initial_variable(self, server_port):
        sid, _ = create_session(server_port)
        status, payload = request(server_port, "GET", f"/sessions/{sid}/variables/1")
        assert status == 200
        assert payload == [{"exponents": [1, 0, 0, 0, 0], "coeff": "u^0·(1)/(1)"}]

    def test_variable_position_out_of_range(self, server_port):
        sid, _ = create_session(server_port)
        status, _ = request(server_port, "GET", f"/sessions/{sid}/variables/9")
        assert status == 404

    def test_mutated_variable_two_terms(self, server_port):
        sid, _ = create_session(server_port)
        request(server_port, "POST", f"/sessions/{sid}/mutate", {"position": 1})
        status, payload = request(server_port, "GET", f"/sessions/{sid}/variables/1")
        assert status == 200
        assert payload == [
            {"exponents": [-1, 0, 1, 0, 1], "coeff": "u^0·(1)/(1)"},
            {"exponents": [-1, 1, 0, 1, 0], "coeff": "u^0·(1)/(1)"},
        ]

    def test_lambda_endpoint(self, server_port):
        sid, seed = create_session(server_port)
        status, payload = request(
            server_port, "GET", f"/sessions/{sid}/quasicommutation?a=1&b=2"
        )
        assert status == 200
        assert payload["lambda"] == seed["L"][0][1] == -1


class TestIsolationAndConcurrency:
    def test_sessions_do_not_interact(self, server_port):
        sid1, _ = create_session(server_port)
        sid2, _ = create_session(server_port)
        request(server_port, "POST", f"/sessions/{sid1}/mutate", {"position": 1})
        _, payload = request(server_port, "GET", f"/sessions/{sid2}")
        assert payload["seed"]["positions"][0]["label"] == [1, 3]
        assert payload["seed"]["history"] == []

    def test_concurrent_clients(self, server_port):
        sids = [create_session(server_port, 2, 5)[0] for _ in range(4)]
        errors = []

        def hammer(sid, position):
            try:
                for _ in range(6):
                    status, _ = request(
                        server_port,
                        "POST",
                        f"/sessions/{sid}/mutate",
                        {"position": position},
                    )
                    assert status == 200
            except Exception as exc:  # pragma: no cover - surfaced via errors list
                errors.append(exc)

        threads = [
            threading.Thread(target=hammer, args=(sid, 1 + (i % 2)))
            for i, sid in enumerate(sids)
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors
        # even number of mutations at one position restores the start
        for i, sid in enumerate(sids):
            _, payload = request(server_port, "GET", f"/sessions/{sid}")
            assert payload["seed"]["positions"][0]["label"] == [1, 3]

    def test_response_seeds_always_compatible(self, server_port):
        from qgrass.seeds import check_compatible

        sid, _ = create_session(server_port, 2, 5)
        for position in (1, 2, 1):
            _, payload = request(
                server_port, "POST", f"/sessions/{sid}/mutate", {"position": position}
            )
            B = tuple(tuple(r) for r in payload["seed"]["B"])
            L = tuple(tuple(r) for r in payload["seed"]["L"])
            assert check_compatible(B, L) == (2, 2)


def test_snapshot_dir(tmp_path):
    server = make_server(port=0, snapshot_dir=str(tmp_path))
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        sid, _ = create_session(port)
        request(port, "POST", f"/sessions/{sid}/mutate", {"position": 1})
        snap = json.loads((tmp_path / f"{sid}.json").read_text())
        assert snap["history"] == [1]
        assert snap["positions"][0]["label"] == [2, 4]
    finally:
        server.shutdown()
        server.server_close()
