import json
import threading

import pytest
from fastapi.testclient import TestClient

from wolofbot.gateway.asr import SimulatedAsr, make_adapter
from wolofbot.gateway.journal import replay_log
from wolofbot.gateway.service import GatewayConfig, create_app, packaged_audio_dir

FIG1_QUESTION = "naka la ma xoole sama poñ yi"
BUTTON_TITLES = ["WAAW", "DÉDÉT", "TAMBALI BI"]


@pytest.fixture()
def harness(sargal_model, tmp_path):
    config = GatewayConfig(log_path=str(tmp_path / "conversations.jsonl"))
    app = create_app(config, model=sargal_model)
    with TestClient(app) as client:
        yield client, app, tmp_path / "conversations.jsonl"


def post(client, session, kind, payload):
    response = client.post(
        "/webhook", json={"session_id": session, "kind": kind, "payload": payload}
    )
    assert response.status_code == 200
    return response.json()["messages"]


class TestWebhook:
    def test_first_contact_greets(self, harness):
        client, _, _ = harness
        messages = post(client, "fresh", "postback", "AFFIRM")
        assert messages[0] == {"kind": "audio", "body": "/audio/greet"}
        assert messages[1]["kind"] == "text"
        assert "Salaamaalekum" in messages[1]["body"]

    def test_fig1_voice_turn(self, harness):
        client, _, _ = harness
        post(client, "u", "postback", "AFFIRM")
        messages = post(client, "u", "voice", FIG1_QUESTION)
        kinds = [m["kind"] for m in messages]
        assert kinds[0] == "asr_echo"
        assert messages[0]["body"] == FIG1_QUESTION  # identity adapter
        assert "audio" in kinds and "buttons" in kinds
        texts = [m["body"] for m in messages if m["kind"] == "text"]
        assert any("#221*1*1#" in t for t in texts)
        buttons = next(m for m in messages if m["kind"] == "buttons")
        assert [b["title"] for b in buttons["body"]] == BUTTON_TITLES

    def test_text_events_skip_asr_echo(self, harness):
        client, _, _ = harness
        post(client, "u", "postback", "AFFIRM")
        messages = post(client, "u", "text", FIG1_QUESTION)
        assert all(m["kind"] != "asr_echo" for m in messages)

    def test_postback_bypasses_nlu(self, harness):
        client, app, _ = harness
        post(client, "u", "text", "salaamaalekum")
        messages = post(client, "u", "postback", "DENY")
        actions = [m["body"] for m in messages if m["kind"] == "audio"]
        assert actions == ["/audio/goodbye"]
        events = app.state.store.active_trackers()["u"].events
        assert events[-2].kind.value == "postback"
        assert events[-2].intent is None  # no NLU output attached

    def test_malformed_events_rejected_and_unlogged(self, harness):
        client, app, log_path = harness
        for body in (
            {"session_id": "", "kind": "text", "payload": "x"},
            {"session_id": "u", "kind": "telepathy", "payload": "x"},
            {"session_id": "u", "kind": "text"},
        ):
            assert client.post("/webhook", json=body).status_code == 422
        assert not log_path.exists() or "tracker_event" not in log_path.read_text()
        assert app.state.store.active_count() == 0


class TestSessions:
    def test_isolation_between_interleaved_sessions(self, harness):
        client, app, _ = harness
        post(client, "alice", "text", "salaamaalekum")
        post(client, "bob", "text", FIG1_QUESTION)
        post(client, "alice", "text", FIG1_QUESTION)
        post(client, "bob", "postback", "DENY")
        trackers = app.state.store.active_trackers()
        alice = [e.action for e in trackers["alice"].events if e.action]
        bob = [e.action for e in trackers["bob"].events if e.action]
        assert alice.count("utter_goodbye") == 0
        assert bob[-1] == "utter_goodbye"
        assert trackers["alice"].session_id == "alice"

    def test_ttl_expiry_recreates_fresh_session(self, sargal_model, tmp_path):
        now = {"t": 1000.0}
        config = GatewayConfig(log_path=str(tmp_path / "log.jsonl"), session_ttl=60.0)
        app = create_app(config, model=sargal_model, clock=lambda: now["t"])
        client = TestClient(app)
        post(client, "u", "text", "salaamaalekum")
        assert app.state.store.active_count() == 1
        now["t"] += 3600.0
        assert app.state.store.active_count() == 0
        messages = post(client, "u", "text", "salaamaalekum")
        assert messages[0]["body"] == "/audio/greet"  # greeted again: fresh tracker
        events = app.state.store.active_trackers()["u"].events
        assert sum(1 for e in events if e.kind.value == "session_start") == 1

    def test_concurrent_first_contact_is_idempotent(self, harness):
        client, app, log_path = harness
        results = []

        def fire():
            results.append(post(client, "race", "text", "salaamaalekum"))

        threads = [threading.Thread(target=fire) for _ in range(2)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        events = app.state.store.active_trackers()["race"].events
        assert sum(1 for e in events if e.kind.value == "session_start") == 1
        greetings = sum(
            1
            for line in log_path.read_text().splitlines()
            if json.loads(line).get("type") == "tracker_event"
            and json.loads(line)["event"]["kind"] == "session_start"
        )
        assert greetings == 1


class TestLog:
    def test_log_complete_and_causally_ordered(self, harness):
        client, _, log_path = harness
        sent = post(client, "u", "postback", "AFFIRM")
        sent += post(client, "u", "voice", FIG1_QUESTION)
        records = [json.loads(line) for line in log_path.read_text().splitlines()]
        inbound = [r for r in records if r["type"] == "inbound"]
        outbound = [r for r in records if r["type"] == "outbound"]
        assert len(inbound) == 2
        assert [r["message"] for r in outbound] == sent  # exactly once, in order
        # inbound precedes the outbound messages it caused
        assert records.index(inbound[0]) < records.index(outbound[0])

    def test_replay_reproduces_tracker_states(self, harness):
        client, app, log_path = harness
        post(client, "u1", "postback", "AFFIRM")
        post(client, "u1", "voice", FIG1_QUESTION)
        post(client, "u2", "text", "lan mooy sargal")
        replayed = replay_log(log_path)
        live = app.state.store.active_trackers()
        assert set(replayed) == set(live)
        for sid in live:
            assert replayed[sid].events == live[sid].events


class TestAudio:
    def test_bit_exact_serving(self, harness):
        client, _, _ = harness
        stored = (packaged_audio_dir() / "greet.wav").read_bytes()
        response = client.get("/audio/greet")
        assert response.status_code == 200
        assert response.headers["content-type"] == "audio/wav"
        assert response.content == stored

    def test_unknown_asset_404(self, harness):
        client, _, _ = harness
        assert client.get("/audio/missing").status_code == 404
        assert client.get("/audio/..%2Fescape").status_code == 404

    def test_startup_validation_fails_on_missing_file(self, sargal_model, tmp_path):
        empty_audio = tmp_path / "audio"
        empty_audio.mkdir()
        config = GatewayConfig(log_path=str(tmp_path / "l.jsonl"), audio_dir=str(empty_audio))
        with pytest.raises(ValueError, match="audio"):
            create_app(config, model=sargal_model)


class TestHealth:
    def test_fresh_service(self, harness):
        client, _, _ = harness
        payload = client.get("/health").json()
        assert payload["status"] == "ok"
        assert payload["sessions"] == 0

    def test_counts_sessions(self, harness):
        client, _, _ = harness
        post(client, "one", "text", "salaamaalekum")
        assert client.get("/health").json()["sessions"] == 1

    def test_degraded_without_model(self, tmp_path):
        app = create_app(GatewayConfig(log_path=str(tmp_path / "l.jsonl")))
        client = TestClient(app)
        assert client.get("/health").json()["status"] == "degraded"
        r = client.post("/webhook", json={"session_id": "u", "kind": "text", "payload": "x"})
        assert r.status_code == 503


class TestSimulatedAsr:
    def test_event_level_determinism(self, sargal_model):
        adapter = make_adapter("simulated", wer=0.4, seed=3, vocab=sargal_model.featurizer.vocab)
        a = adapter.transcribe(FIG1_QUESTION, "s1", 2)
        b = adapter.transcribe(FIG1_QUESTION, "s1", 2)
        assert a == b
        assert isinstance(adapter, SimulatedAsr)

    def test_different_turns_decorrelated(self, sargal_model):
        adapter = make_adapter("simulated", wer=1.0, seed=3, vocab=sargal_model.featurizer.vocab)
        outs = {adapter.transcribe(FIG1_QUESTION, "s1", turn) for turn in range(6)}
        assert len(outs) > 1

    def test_unknown_adapter_rejected(self):
        with pytest.raises(ValueError):
            make_adapter("quantum")
