"""HTTP review service for the manual verification workflow.

Serves the candidate queue with letter context and normalizer
suggestions, accepts decisions into the append-only log (fsync per
append; the log is the single source of truth and is replayed on
startup), and reports per-bucket progress. A plan-hash header rides on
every API response so a client can detect plan/log mismatch.
"""

import hashlib
import json
import threading
from datetime import datetime, timezone

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .classify import (
    DecisionError,
    MappingDecision,
    append_decision,
    apply_decisions,
    decision_to_json,
    read_decision_log,
)
from .normalize import Normalizer
from .sampling import BucketKey, bucket_key_for, candidate_pool, first_appearances

DEFAULT_CONTEXT_CHARS = 120
DEFAULT_PAGE_SIZE = 20

_STATUSES = ("pending", "accepted", "edited", "rejected", "no_entry")


class ReviewState:
    """In-memory queue state over immutable plan/corpus/lexicon + the log."""

    def __init__(self, plan, corpus, lexicon, log_path, plan_hash,
                 context_chars=DEFAULT_CONTEXT_CHARS):
        self.plan = plan
        self.corpus = corpus
        self.lexicon = lexicon
        self.log_path = log_path
        self.plan_hash = plan_hash
        self.context_chars = context_chars
        self.normalizer = Normalizer(lexicon)
        self.letters = corpus.letter_index()
        first_map = first_appearances(corpus)
        self.pool = candidate_pool(plan, first_map)
        self.lock = threading.Lock()
        self._suggestion_cache = {}
        try:
            log = read_decision_log(log_path)
        except FileNotFoundError:
            log = []
        self.effective, self.skipped = apply_decisions(self.pool, log)

    def bucket_of(self, key):
        letter = self.letters[key[1]]
        return bucket_key_for(self.corpus, letter)

    def context_for(self, key):
        form, letter_id = key
        letter = self.letters[letter_id]
        if letter.text is not None:
            token = next(
                (t for t in letter.tokens if t.surface.casefold() == form), None
            )
            if token is not None:
                lo = max(0, token.offset - self.context_chars)
                hi = min(len(letter.text), token.offset + len(token.surface) + self.context_chars)
                return letter.text[lo:hi], token.surface
        surfaces = [t.surface for t in letter.tokens]
        joined = " ".join(surfaces)
        pos = 0
        start = 0
        surface = form
        for t in letter.tokens:
            if t.surface.casefold() == form:
                surface = t.surface
                start = pos
                break
            pos += len(t.surface) + 1
        lo = max(0, start - self.context_chars)
        hi = min(len(joined), start + len(surface) + self.context_chars)
        return joined[lo:hi], surface

    def suggestions_for(self, form):
        cached = self._suggestion_cache.get(form)
        if cached is None:
            cached = [
                {
                    "lemma": c.entry.lemma,
                    "pos": c.entry.pos,
                    "score": round(c.score, 4),
                    "method": c.method,
                    "senses": [
                        {
                            "sense_id": s.sense_id,
                            "gloss": s.gloss,
                            "year": s.first_attestation_year,
                            "ht_path": list(s.ht_path),
                        }
                        for s in c.entry.senses
                    ],
                }
                for c in self.normalizer.normalize(form)
            ]
            self._suggestion_cache[form] = cached
        return cached

    def candidate_view(self, key):
        context, surface = self.context_for(key)
        letter = self.letters[key[1]]
        return {
            "candidate_key": {"form": key[0], "letter_id": key[1]},
            "surface": surface,
            "context": context,
            "letter_year": letter.year,
            "bucket_key": {
                "gender": (b := self.bucket_of(key)).gender,
                "rank": b.rank,
                "relationship": b.relationship,
            },
            "effective_status": self.effective[key].status,
            "suggestions": self.suggestions_for(key[0]),
        }

    def progress(self):
        buckets = {}
        for key in self.pool:
            bucket = str(self.bucket_of(key))
            counts = buckets.setdefault(
                bucket,
                {"total": 0, "pending": 0, "accepted": 0, "edited": 0,
                 "rejected": 0, "no_entry": 0},
            )
            counts["total"] += 1
            counts[self.effective[key].status] += 1
        totals = {"total": 0, "pending": 0, "accepted": 0, "edited": 0,
                  "rejected": 0, "no_entry": 0}
        for counts in buckets.values():
            for field in totals:
                totals[field] += counts[field]
        return {"buckets": dict(sorted(buckets.items())), "totals": totals}

    def submit(self, key, status, entry, sense_id, reviewer):
        if status == "pending" or status not in _STATUSES:
            raise HTTPException(422, f"cannot submit decision with status '{status}'")
        if key not in self.effective:
            raise HTTPException(404, f"unknown candidate {key}")
        if status in ("accepted", "edited"):
            if not entry:
                raise HTTPException(422, f"{status} decision requires an entry")
            lemma, pos = entry
            resolved = self.lexicon.entry(lemma, pos)
            if resolved is None:
                raise HTTPException(422, f"entry {lemma}/{pos} not in lexicon")
            if sense_id is not None:
                try:
                    resolved.sense(sense_id)
                except KeyError:
                    raise HTTPException(
                        422, f"entry {lemma}/{pos} has no sense '{sense_id}'"
                    ) from None
        elif entry:
            raise HTTPException(422, f"{status} decision must not carry an entry")
        timestamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%S.%fZ")
        try:
            decision = MappingDecision(
                candidate_key=key,
                status=status,
                entry=tuple(entry) if entry else None,
                sense_id=sense_id,
                reviewer=reviewer,
                timestamp=timestamp,
            )
        except DecisionError as exc:
            raise HTTPException(422, str(exc)) from exc
        with self.lock:
            append_decision(self.log_path, decision)
            self.effective[key] = decision
        return decision


def _plan_file_hash(plan_path):
    with open(plan_path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def create_app(plan, corpus, lexicon, log_path, plan_hash="", ui_dir=None,
               context_chars=DEFAULT_CONTEXT_CHARS):
    state = ReviewState(plan, corpus, lexicon, log_path, plan_hash, context_chars)
    app = FastAPI(title="neologia review service")
    app.state.review = state

    @app.middleware("http")
    async def add_plan_hash(request, call_next):
        response = await call_next(request)
        response.headers["X-Plan-Hash"] = state.plan_hash
        return response

    @app.get("/api/plan")
    def plan_meta():
        return {
            "plan_hash": state.plan_hash,
            "period": list(state.plan.period),
            "candidates": len(state.pool),
            "skipped_log_decisions": len(state.skipped),
        }

    @app.get("/api/candidates")
    def candidates(status: str = "", bucket: str = "", page: int = 0,
                   page_size: int = DEFAULT_PAGE_SIZE):
        if status and status not in _STATUSES:
            raise HTTPException(400, f"unknown status '{status}'")
        keys = state.pool
        if bucket:
            try:
                wanted = BucketKey.parse(bucket)
            except Exception:
                raise HTTPException(400, f"bad bucket '{bucket}'") from None
            known = {str(state.bucket_of(k)) for k in state.pool}
            if str(wanted) not in known:
                raise HTTPException(400, f"unknown bucket '{bucket}'")
            keys = [k for k in keys if state.bucket_of(k) == wanted]
        if status:
            keys = [k for k in keys if state.effective[k].status == status]
        total = len(keys)
        start = page * page_size
        items = [state.candidate_view(k) for k in keys[start:start + page_size]]
        return {"items": items, "page": page, "page_size": page_size, "total": total}

    @app.post("/api/decisions")
    async def post_decision(request: Request):
        try:
            body = await request.json()
        except json.JSONDecodeError:
            raise HTTPException(422, "request body must be JSON") from None
        key_obj = body.get("candidate_key") or {}
        form = key_obj.get("form")
        letter_id = key_obj.get("letter_id")
        if not form or not letter_id:
            raise HTTPException(422, "candidate_key must carry form and letter_id")
        entry_obj = body.get("entry")
        entry = (entry_obj.get("lemma"), entry_obj.get("pos")) if entry_obj else None
        decision = state.submit(
            (form, letter_id),
            body.get("status", ""),
            entry,
            body.get("sense_id"),
            body.get("reviewer", ""),
        )
        return JSONResponse(decision_to_json(decision))

    @app.get("/api/progress")
    def progress():
        return state.progress()

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    else:
        @app.get("/")
        def index():
            return {
                "service": "neologia review",
                "endpoints": ["/api/plan", "/api/candidates", "/api/decisions",
                              "/api/progress"],
            }

    return app


def create_app_from_paths(plan_path, corpus, lexicon, log_path, ui_dir=None,
                          context_chars=DEFAULT_CONTEXT_CHARS):
    from .sampling import load_plan

    plan = load_plan(plan_path)
    return create_app(
        plan, corpus, lexicon, log_path,
        plan_hash=_plan_file_hash(plan_path),
        ui_dir=ui_dir,
        context_chars=context_chars,
    )
