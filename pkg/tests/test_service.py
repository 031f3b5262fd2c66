from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from cricrules.service import create_app

from conftest import FIXTURES


@pytest.fixture(scope="module")
def client(small_corpus, lexicon, roster):
    app = create_app(small_corpus, lexicon, roster)
    with TestClient(app) as c:
        yield c


class TestHealth:
    def test_health(self, client, small_corpus):
        resp = client.get("/health")
        assert resp.status_code == 200
        body = resp.json()
        assert body["status"] == "ok"
        assert body["records"] == len(small_corpus.records)
        assert body["players"] == 3
        assert body["date_from"] <= body["date_to"]


class TestPlayers:
    def test_listing(self, client):
        resp = client.get("/players")
        assert resp.status_code == 200
        players = resp.json()
        assert [p["player"] for p in players] == ["A Larkin", "E Navarro", "H Sodhi"]
        larkin = players[0]
        assert larkin["batting_deliveries"] == 400
        assert larkin["bowling_deliveries"] == 8


class TestAnalysis:
    def test_body_is_byte_identical_to_cli_golden(self, client):
        resp = client.get("/analysis", params={"player": "A Larkin", "type": "bat"})
        assert resp.status_code == 200
        assert resp.content == (FIXTURES / "golden_analysis.json").read_bytes()
        assert resp.headers["content-type"].startswith("application/json")

    def test_long_form_type_accepted(self, client):
        short = client.get("/analysis", params={"player": "A Larkin", "type": "bat"})
        long = client.get("/analysis", params={"player": "A Larkin", "type": "batting"})
        assert long.status_code == 200
        assert long.content == short.content

    def test_query_parameters(self, client):
        resp = client.get(
            "/analysis",
            params={
                "player": "A Larkin",
                "type": "bat",
                "from": "2019-06-01",
                "to": "2020-06-01",
                "categories": "response",
                "top_k": 2,
            },
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["provenance"]["date_from"] == "2019-06-01"
        assert body["provenance"]["date_to"] == "2020-06-01"
        assert body["provenance"]["top_k"] == 2
        assert list(body["biplots"]) == ["response"]

    def test_class_filter(self, client):
        resp = client.get(
            "/analysis", params={"player": "A Larkin", "opponents": "spin"}
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["provenance"]["opponents"]["bowler_class"] == "spin"

    def test_unknown_player_404(self, client):
        resp = client.get("/analysis", params={"player": "Nobody"})
        assert resp.status_code == 404
        assert resp.json()["error"]["code"] == "UNKNOWN_PLAYER"

    def test_bad_type_400(self, client):
        resp = client.get("/analysis", params={"player": "A Larkin", "type": "wk"})
        assert resp.status_code == 400
        assert resp.json()["error"]["code"] == "INVALID_FILTER"

    def test_bad_date_400(self, client):
        resp = client.get(
            "/analysis", params={"player": "A Larkin", "from": "last tuesday"}
        )
        assert resp.status_code == 400
        assert resp.json()["error"]["code"] == "INVALID_FILTER"

    def test_empty_window_422(self, client):
        resp = client.get(
            "/analysis",
            params={"player": "A Larkin", "from": "1901-01-01", "to": "1901-12-31"},
        )
        assert resp.status_code == 422
        assert resp.json()["error"]["code"] == "EMPTY_SELECTION"

    def test_bad_category_400(self, client):
        resp = client.get(
            "/analysis", params={"player": "A Larkin", "categories": "yorker"}
        )
        assert resp.status_code == 400
        assert resp.json()["error"]["code"] == "INVALID_FILTER"

    def test_cors_headers(self, client):
        resp = client.get(
            "/analysis",
            params={"player": "A Larkin"},
            headers={"Origin": "http://localhost:5173"},
        )
        assert resp.headers["access-control-allow-origin"] == "*"


def test_roster_error_without_roster(small_corpus, lexicon):
    app = create_app(small_corpus, lexicon, roster=None)
    with TestClient(app) as client:
        resp = client.get("/analysis", params={"player": "A Larkin", "opponents": "fast"})
        assert resp.status_code == 400
        assert resp.json()["error"]["code"] == "ROSTER_ERROR"
