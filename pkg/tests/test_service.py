import json

import pytest
from fastapi.testclient import TestClient

from neologia.sampling import load_plan
from neologia.service import create_app
from tests.conftest import fixture_path


@pytest.fixture()
def review_plan():
    return load_plan(fixture_path("plan17_review.json"))


def make_client(review_plan, corpus17, lexicon, log_path):
    app = create_app(review_plan, corpus17, lexicon, str(log_path), plan_hash="h17")
    return TestClient(app)


@pytest.fixture()
def client(review_plan, corpus17, lexicon, tmp_path):
    return make_client(review_plan, corpus17, lexicon, tmp_path / "log.jsonl")


def accept_body(item):
    suggestion = item["suggestions"][0]
    return {
        "candidate_key": item["candidate_key"],
        "status": "accepted",
        "entry": {"lemma": suggestion["lemma"], "pos": suggestion["pos"]},
        "sense_id": suggestion["senses"][0]["sense_id"],
        "reviewer": "ui",
    }


def fetch_all(client, **params):
    items = []
    page = 0
    while True:
        resp = client.get("/api/candidates", params={"page": page, "page_size": 50, **params})
        assert resp.status_code == 200
        data = resp.json()
        items.extend(data["items"])
        if (page + 1) * 50 >= data["total"]:
            return items, data["total"]
        page += 1


def test_fresh_log_all_pending(client):
    resp = client.get("/api/progress")
    totals = resp.json()["totals"]
    assert totals == {
        "total": 63, "pending": 63, "accepted": 0, "edited": 0,
        "rejected": 0, "no_entry": 0,
    }
    assert resp.headers["X-Plan-Hash"] == "h17"


def test_candidate_view_shape(client):
    items, total = fetch_all(client)
    assert total == 63
    tee = next(i for i in items if i["candidate_key"]["form"] == "tee")
    assert tee["letter_year"] == 1643
    assert tee["bucket_key"] == {
        "gender": "male", "rank": "nobility", "relationship": "nuclear_family",
    }
    assert tee["surface"].casefold() == "tee"
    assert tee["surface"] in tee["context"]
    top = tee["suggestions"][0]
    assert top["lemma"] == "tea" and top["method"] == "exact"
    assert top["senses"][0]["year"] == 1655


def test_unknown_status_and_bucket_rejected(client):
    assert client.get("/api/candidates", params={"status": "odd"}).status_code == 400
    assert client.get("/api/candidates", params={"bucket": "m|x"}).status_code == 400
    assert (
        client.get("/api/candidates", params={"bucket": "male|royalty|other_family"}).status_code
        == 400
    )


def test_bucket_filter_partitions(client):
    resp = client.get("/api/progress")
    buckets = resp.json()["buckets"]
    counted = 0
    for bucket in buckets:
        items, total = fetch_all(client, bucket=bucket)
        assert total == buckets[bucket]["total"]
        counted += total
    assert counted == 63


def test_decision_flow(client):
    items, _ = fetch_all(client, status="pending")
    item = items[0]
    resp = client.post("/api/decisions", json=accept_body(item))
    assert resp.status_code == 200
    stored = resp.json()
    assert stored["status"] == "accepted"
    assert stored["candidate_key"] == item["candidate_key"]
    assert stored["timestamp"]
    progress = client.get("/api/progress").json()["totals"]
    assert progress["pending"] == 62 and progress["accepted"] == 1
    items, total = fetch_all(client, status="pending")
    assert total == 62


def test_unknown_key_404(client):
    resp = client.post(
        "/api/decisions",
        json={
            "candidate_key": {"form": "ghost", "letter_id": "L1"},
            "status": "accepted",
            "entry": {"lemma": "tea", "pos": "noun"},
        },
    )
    assert resp.status_code == 404


def test_accept_without_entry_422(client):
    items, _ = fetch_all(client)
    resp = client.post(
        "/api/decisions",
        json={"candidate_key": items[0]["candidate_key"], "status": "accepted"},
    )
    assert resp.status_code == 422


def test_entry_outside_lexicon_422(client):
    items, _ = fetch_all(client)
    resp = client.post(
        "/api/decisions",
        json={
            "candidate_key": items[0]["candidate_key"],
            "status": "edited",
            "entry": {"lemma": "nonesuch", "pos": "noun"},
        },
    )
    assert resp.status_code == 422


def test_no_entry_with_entry_422(client):
    items, _ = fetch_all(client)
    resp = client.post(
        "/api/decisions",
        json={
            "candidate_key": items[0]["candidate_key"],
            "status": "no_entry",
            "entry": {"lemma": "tea", "pos": "noun"},
        },
    )
    assert resp.status_code == 422


def test_pending_not_submittable(client):
    items, _ = fetch_all(client)
    resp = client.post(
        "/api/decisions",
        json={"candidate_key": items[0]["candidate_key"], "status": "pending"},
    )
    assert resp.status_code == 422


def test_redecide_same_key_supersedes(client):
    items, _ = fetch_all(client)
    item = items[0]
    client.post("/api/decisions", json=accept_body(item))
    resp = client.post(
        "/api/decisions",
        json={"candidate_key": item["candidate_key"], "status": "rejected"},
    )
    assert resp.status_code == 200
    totals = client.get("/api/progress").json()["totals"]
    assert totals["total"] == 63
    assert totals["rejected"] == 1 and totals["accepted"] == 0
    assert totals["pending"] == 62


def test_durability_restart_replays(review_plan, corpus17, lexicon, tmp_path):
    log_path = tmp_path / "log.jsonl"
    client = make_client(review_plan, corpus17, lexicon, log_path)
    items, _ = fetch_all(client)
    for item in items[:5]:
        assert client.post("/api/decisions", json=accept_body(item)).status_code == 200
    reborn = make_client(review_plan, corpus17, lexicon, log_path)
    totals = reborn.get("/api/progress").json()["totals"]
    assert totals["accepted"] == 5 and totals["pending"] == 58


def test_full_review_zero_pending(review_plan, corpus17, lexicon, tmp_path):
    log_path = tmp_path / "log.jsonl"
    client = make_client(review_plan, corpus17, lexicon, log_path)
    items, total = fetch_all(client)
    assert total == 63
    for item in items:
        assert client.post("/api/decisions", json=accept_body(item)).status_code == 200
    totals = client.get("/api/progress").json()["totals"]
    assert totals["pending"] == 0 and totals["accepted"] == 63
    _, pending_total = fetch_all(client, status="pending")
    assert pending_total == 0
    # and the log is valid decision JSONL
    lines = log_path.read_text().strip().split("\n")
    assert len(lines) == 63
    assert all(json.loads(line)["status"] == "accepted" for line in lines)


def test_corrupt_log_aborts(review_plan, corpus17, lexicon, tmp_path):
    log_path = tmp_path / "log.jsonl"
    log_path.write_text('{"broken\n', encoding="utf-8")
    with pytest.raises(Exception, match="line 1"):
        make_client(review_plan, corpus17, lexicon, log_path)


def test_index_lists_endpoints(client):
    resp = client.get("/")
    assert resp.status_code == 200
    assert "/api/candidates" in resp.json()["endpoints"]
