import pytest
from fastapi.testclient import TestClient

from app.main import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as test_client:
        yield test_client


def test_root(client):
    body = client.get("/").json()
    assert body["health_check"] == "/api/v1/health"


def test_quick_health(client):
    response = client.get("/api/v1/health/quick")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_full_health(client):
    body = client.get("/api/v1/health/").json()
    assert body["status"] == "healthy"
    assert set(body["components"]) == {"engines", "registry", "configuration"}


def test_sequence_list(client):
    names = [info["name"] for info in client.get("/api/v1/sequences/").json()]
    assert "period-doubling" in names
    assert "thue-morse" in names


def test_prefix(client):
    body = client.get("/api/v1/sequences/fibonacci/prefix", params={"length": 8}).json()
    assert body["prefix"] == "01001010"


def test_parametric_prefix(client):
    response = client.get("/api/v1/sequences/sturmian/prefix", params={"length": 8, "cf": "(1)"})
    assert response.json()["prefix"] == "01001010"


def test_complexity(client):
    response = client.get("/api/v1/sequences/period-doubling/complexity", params={"k_max": 7, "budget": 4096})
    assert response.status_code == 200
    assert response.json()["pal"][1:] == [2, 1, 3, 0, 4, 0, 3]


def test_ratios(client):
    rows = client.get("/api/v1/sequences/fibonacci/ratios", params={"k_max": 2, "budget": 4096}).json()
    assert [row["k_pal_over_fac"] for row in rows] == ["1/1", "2/3"]


def test_unknown_sequence_is_bad_request(client):
    assert client.get("/api/v1/sequences/no-such-sequence/prefix").status_code == 400


def test_parametric_source_without_parameters(client):
    assert client.get("/api/v1/sequences/sturmian/complexity").status_code == 400


def test_check_listing(client):
    body = client.get("/api/v1/verify/").json()
    assert "droubay-pirillo" in body["checks"]
    assert "fibonacci" in body["survey_tables"]


def test_verify(client):
    response = client.get("/api/v1/verify/droubay-pirillo",
                          params={"source": "fibonacci", "k_max": 12, "budget": 4096})
    assert response.status_code == 200
    assert response.json()["status"] == "pass"


def test_unknown_check(client):
    assert client.get("/api/v1/verify/no-such-check").status_code == 404


def test_api_index(client):
    body = client.get("/api/v1/").json()
    assert body["endpoints"] == {
        "health": "/api/v1/health",
        "sequences": "/api/v1/sequences",
        "verify": "/api/v1/verify",
    }
