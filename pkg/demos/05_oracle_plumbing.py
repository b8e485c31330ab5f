"""
The attitude oracle: prompts, caching, replay
=============================================

Leaders ask an oracle twice per round: once to produce a social-media
action, once to score that action's attitude toward the current
event. In production the oracle is a chat-completion endpoint; this
script swaps in a tiny in-process stand-in to show the full plumbing
- prompt rendering, response parsing, the on-disk cache, and replay -
without any network.
"""
import json
from dataclasses import replace
from pathlib import Path

from opiniongrid import run_scenario, reversal_scenario
from opiniongrid.leaders import LeaderProfile, PERSONAS
from opiniongrid.llm import (ProviderConfig, complete, parse_attitude,
                             render_action_prompt)

cache_dir = Path(__file__).parent / "output" / "oracle_cache"
out_dir = Path(__file__).parent / "output" / "oracle_run"


def stub_transport(cfg, payload):
    """Answer like a chat API: status code plus JSON body."""
    prompt = payload["messages"][0]["content"]
    if prompt.startswith("Score the attitude"):
        content = "ATTITUDE: -1"
    else:
        content = "ACTION: comment\nTEXT: the correction changes everything"
    return 200, json.dumps({"choices": [{"message": {"content": content}}]})


# What a leader actually sends. The action prompt carries the
# persona, the current attitude, breaking news if any landed this
# round, and the last few visible posts from like-minded leaders.
profile = LeaderProfile(id="L0.0", persona=PERSONAS[0], attitude=1)
action_prompt = render_action_prompt(profile, visible=[],
                                     news="official correction: the story reverses")
print("--- action prompt ---")
print(action_prompt.split("\n\n")[0])

# The scoring prompt quotes the statement and demands a single
# ATTITUDE line, which parse_attitude decodes strictly.
cfg = ProviderConfig(endpoint="https://example.test/v1", model="demo-model",
                     cache_dir=str(cache_dir))
raw = complete("Score the attitude of this statement.\nStatement: \"no way\"",
               cfg, transport=stub_transport)
print(f"\nmodel said {raw!r} -> parsed attitude {parse_attitude(raw)}")

# A full live-oracle run against the stub. Every completion lands in
# the cache directory keyed by (model, temperature, prompt).
scenario = reversal_scenario(
    seed=2, days_before=1, days_after=1, leader_shape=(2, 2),
    follower_shape=(6, 6), output_dir=str(out_dir))
scenario = replace(scenario, oracle={"kind": "live",
                                     "endpoint": "https://example.test/v1",
                                     "model": "demo-model",
                                     "cache_dir": str(cache_dir)})
report = run_scenario(scenario, transport=stub_transport)
print(f"\nlive run: {len(report.trajectory)} rounds, "
      f"{len(list(cache_dir.glob('*.json')))} cached completions")

# Replay: the same scenario with a transport that refuses all traffic
# still completes, because every prompt is already cached. This is
# what makes live runs reproducible after the fact.
def dead_transport(cfg, payload):
    raise RuntimeError("network disabled for replay")

replay = run_scenario(scenario, transport=dead_transport)
identical = (replay.trajectory.values == report.trajectory.values).all()
print(f"replay without network: byte-for-byte identical = {identical}")
