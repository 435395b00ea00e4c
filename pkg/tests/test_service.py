import http.client
import json
import threading
from concurrent.futures import ThreadPoolExecutor
from urllib.parse import quote

import pytest

from emojinet.service import BadRequest, InventoryIndex, NotFound, make_server
from oracles import read_jsonl


@pytest.fixture(scope="module")
def index(built):
    config, _ = built
    return InventoryIndex.load(config.output)


@pytest.fixture(scope="module")
def records(built):
    config, _ = built
    return read_jsonl(config.output)


@pytest.fixture(scope="module")
def server(index):
    srv = make_server(index, "127.0.0.1", 0)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    yield srv.server_address[1]
    srv.shutdown()
    srv.server_close()


def get(port, path):
    conn = http.client.HTTPConnection("127.0.0.1", port, timeout=10)
    try:
        conn.request("GET", path)
        resp = conn.getresponse()
        return resp.status, json.loads(resp.read().decode("utf-8"))
    finally:
        conn.close()


def test_get_by_codepoint(index):
    entry = index.get_by_codepoint("U+1F602")
    assert entry.shortcode == "face_with_tears_of_joy"
    assert index.get_by_codepoint("😂") is entry
    with pytest.raises(NotFound):
        index.get_by_codepoint("U+0000")
    with pytest.raises(BadRequest):
        index.get_by_codepoint("U+ZZ")


def test_get_by_shortcode(index):
    assert index.get_by_shortcode(":Face_With_Tears_Of_Joy:") is index.get_by_shortcode("face_with_tears_of_joy")
    with pytest.raises(NotFound):
        index.get_by_shortcode("no_such_thing")


def test_search_by_sense(index):
    assert "U+1F64F" in [e.unicode for e in index.search_by_sense("pray", "verb")]
    assert index.search_by_sense("laugh", "adjective") == []
    assert index.search_by_sense("xyzzy", "noun") == []
    with pytest.raises(BadRequest):
        index.search_by_sense("laugh", "adverb")


def test_http_endpoints(server, records):
    joy = next(r for r in records if r["unicode"] == "U+1F602")
    assert get(server, "/emoji/U+1F602") == (200, {"status": "ok", "entry": joy})
    assert get(server, "/emoji/" + quote("😂")) == (200, {"status": "ok", "entry": joy})
    assert get(server, "/emoji/by-shortcode/" + quote(":face_with_tears_of_joy:"))[1]["entry"] == joy
    status, body = get(server, "/senses?word=pray&pos=verb")
    assert status == 200 and "U+1F64F" in [e["unicode"] for e in body["entries"]]
    assert get(server, "/senses?word=laugh&pos=adjective") == (200, {"status": "ok", "entries": []})


@pytest.mark.parametrize(
    "path, status",
    [
        ("/emoji/U+0000", 404),
        ("/emoji/U+ZZZZ", 400),
        ("/emoji/by-shortcode/nope", 404),
        ("/senses?word=laugh&pos=adverb", 400),
        ("/senses?pos=noun", 400),
        ("/nowhere", 404),
    ],
)
def test_http_errors(server, path, status):
    got, body = get(server, path)
    assert got == status
    assert body["status"] == "error" and body["error"]


def test_consistency_with_bruteforce_scan(index, records):
    for rec in records:
        assert index.get_by_codepoint(rec["unicode"]).to_record() == rec
        if rec["shortcode"]:
            assert index.get_by_shortcode(rec["shortcode"]).unicode == rec["unicode"]
        for s in rec["senses"]:
            expected = sorted(
                r["unicode"] for r in records if any((t["word"], t["pos"]) == (s["word"], s["pos"]) for t in r["senses"])
            )
            assert [e.unicode for e in index.search_by_sense(s["word"], s["pos"])] == expected


def test_concurrent_requests_leave_inventory_untouched(built, server, records):
    config, _ = built
    before = config.output.read_bytes()
    paths = []
    for i, rec in enumerate(records):
        paths.append("/emoji/" + rec["unicode"])
        if rec["shortcode"]:
            paths.append("/emoji/by-shortcode/" + rec["shortcode"])
        if rec["senses"]:
            s = rec["senses"][i % len(rec["senses"])]
            paths.append(f"/senses?word={quote(s['word'])}&pos={s['pos']}")
    paths = (paths * 2)[:100]
    by_code = {r["unicode"]: r for r in records}
    with ThreadPoolExecutor(max_workers=16) as pool:
        results = list(pool.map(lambda p: (p, get(server, p)), paths))
    for path, (status, body) in results:
        assert status == 200
        if "entry" in body:
            assert body["entry"] == by_code[body["entry"]["unicode"]]
        else:
            assert all(e == by_code[e["unicode"]] for e in body["entries"])
    assert config.output.read_bytes() == before
