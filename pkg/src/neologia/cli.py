"""Command-line entry point: ingest -> sample -> serve/classify -> report.

Stages can run individually via subcommands or end to end via ``run``
with a config file; ``run`` records input hashes in a manifest so
unchanged stages are skipped on rerun. Exit codes: 0 ok, 1 usage,
2 data error.
"""

import argparse
import hashlib
import json
import os
import sys

from . import analytics, classify, corpus as corpus_mod, lexicon as lexicon_mod
from . import normalize as normalize_mod, sampling

USAGE_EXIT = 1
DATA_EXIT = 2

DATA_ERRORS = (
    corpus_mod.CorpusError,
    lexicon_mod.LexiconError,
    sampling.PlanError,
    classify.DecisionError,
    normalize_mod.RuleError,
    FileNotFoundError,
    json.JSONDecodeError,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _parse_period(text):
    try:
        start, end = text.split(":")
        period = (int(start), int(end))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"period must look like 1640:1660, got '{text}'"
        ) from None
    if period[0] > period[1]:
        raise argparse.ArgumentTypeError("period start must not exceed end")
    return period


def _load_corpus_arg(path, period=None):
    """Accept either a raw corpus JSONL or an ingest output directory."""
    if os.path.isdir(path):
        meta_path = os.path.join(path, "meta.json")
        with open(meta_path, encoding="utf-8") as fh:
            meta = json.load(fh)
        return corpus_mod.parse_corpus(
            os.path.join(path, "corpus.jsonl"), period=tuple(meta["period"])
        )
    return corpus_mod.parse_corpus(path, period=period)


def cmd_ingest(args):
    corpus = corpus_mod.parse_corpus(args.corpus, period=args.period)
    os.makedirs(args.out, exist_ok=True)
    corpus_mod.serialize_corpus(corpus, os.path.join(args.out, "corpus.jsonl"))
    meta = {
        "period": list(corpus.period),
        "persons": len(corpus.persons),
        "letters": len(corpus.letters),
        "running_words": corpus_mod.running_words(corpus),
    }
    with open(os.path.join(args.out, "meta.json"), "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(
        f"ingested {meta['letters']} letters / {meta['persons']} persons, "
        f"{meta['running_words']} running words -> {args.out}"
    )
    return 0


def cmd_lexicon(args):
    lex = lexicon_mod.load_lexicon(args.lexicon)
    if args.lexicon_cmd == "validate":
        print(f"ok: {len(lex.entries)} entries, {len(lex.variant_index)} variants")
        return 0
    entries = lexicon_mod.lookup_variant(lex, args.form)
    for entry in sorted(entries, key=lambda e: (e.lemma, e.pos)):
        year = lexicon_mod.earliest_attestation(entry)
        print(f"{entry.lemma}\t{entry.pos}\t{year}")
    if not entries:
        print(f"no entry lists '{args.form}'", file=sys.stderr)
    return 0


def _candidate_json(cand):
    return {
        "surface": cand.surface,
        "lemma": cand.entry.lemma,
        "pos": cand.entry.pos,
        "score": round(cand.score, 4),
        "method": cand.method,
    }


def cmd_normalize(args):
    lex = lexicon_mod.load_lexicon(args.lexicon)
    rules = normalize_mod.load_rules(args.rules) if args.rules else None
    normalizer = normalize_mod.Normalizer(
        lex, rules=rules, k=args.k, max_cost=args.max_cost
    )
    forms = list(args.forms)
    if args.infile:
        with open(args.infile, encoding="utf-8") as fh:
            forms.extend(line.strip() for line in fh if line.strip())
    if not forms:
        print("no forms given", file=sys.stderr)
        return USAGE_EXIT
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for form in forms:
            cands = normalizer.normalize(form)
            obj = {"form": form, "candidates": [_candidate_json(c) for c in cands]}
            out.write(json.dumps(obj, ensure_ascii=False) + "\n")
    finally:
        if args.out:
            out.close()
    return 0


def cmd_sample(args):
    corpus = _load_corpus_arg(args.corpus)
    period = args.period or corpus.period
    buckets = sampling.build_buckets(corpus, period)
    plan = sampling.draw_sample(buckets, args.target_words, args.seed, period=period)
    first_map = sampling.first_appearances(corpus)
    sampling.attach_candidates(plan, first_map)
    sampling.save_plan(plan, args.out)
    achieved = sum(plan.achieved.values())
    pool = len(sampling.candidate_pool(plan, first_map))
    print(
        f"plan: {len(plan.selected)} buckets, {len(plan.letter_ids())} letters, "
        f"{achieved} words (target/bucket {plan.target_words_per_bucket:.0f}), "
        f"{pool} candidate forms -> {args.out}"
    )
    return 0


def cmd_classify(args):
    corpus = _load_corpus_arg(args.corpus)
    lex = lexicon_mod.load_lexicon(args.lexicon)
    plan = sampling.load_plan(args.plan)
    first_map = sampling.first_appearances(corpus)
    pool = sampling.candidate_pool(plan, first_map)
    log = classify.read_decision_log(args.log)
    records = classify.classify_all(pool, log, corpus, lex, args.window)
    classify.write_records(records, args.out)
    no_entry = classify.no_entry_candidates(pool, log)
    if args.no_entry_out:
        with open(args.no_entry_out, "w", encoding="utf-8") as fh:
            for form, letter_id in no_entry:
                fh.write(
                    json.dumps({"form": form, "letter_id": letter_id}) + "\n"
                )
    print(
        f"{len(records)} records, {classify.type_count(records)} types, "
        f"{len(no_entry)} no-entry candidates -> {args.out}"
    )
    return 0


def cmd_report(args):
    corpus = _load_corpus_arg(args.corpus)
    records = classify.read_records(args.records)
    letter_ids = None
    if args.plan:
        letter_ids = sampling.load_plan(args.plan).letter_ids()
    axes = [args.axis] if args.axis else ["gender", "rank", "relationship"]
    for axis in axes:
        report = analytics.frequency_report(
            records,
            corpus,
            "age_group" if axis == "age" else axis,
            age_split=args.age_split,
            letter_ids=letter_ids,
        )
        if args.out_dir:
            os.makedirs(args.out_dir, exist_ok=True)
            analytics.write_report_files(
                report, os.path.join(args.out_dir, f"freq_{axis}")
            )
        else:
            print(f"# axis: {axis}")
            print(analytics.report_to_tsv(report), end="")
    if args.out_dir:
        print(f"reports -> {args.out_dir}")
    return 0


def cmd_serve(args):
    import uvicorn

    from .service import create_app_from_paths

    corpus = _load_corpus_arg(args.corpus)
    lex = lexicon_mod.load_lexicon(args.lexicon)
    ui_dir = args.ui_dir if args.ui_dir and os.path.isdir(args.ui_dir) else None
    app = create_app_from_paths(args.plan, corpus, lex, args.log, ui_dir=ui_dir)
    host, _, port = args.bind.partition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8417), log_level="warning")
    return 0


def _hash_inputs(files, params):
    digest = hashlib.sha256()
    for path in files:
        digest.update(path.encode())
        with open(path, "rb") as fh:
            digest.update(fh.read())
    digest.update(json.dumps(params, sort_keys=True).encode())
    return digest.hexdigest()


class _Pipeline:
    """Stage runner for ``run``: content-addressed skip via a manifest."""

    def __init__(self, manifest_path, force=False, dry_run=False):
        self.manifest_path = manifest_path
        self.force = force
        self.dry_run = dry_run
        self.manifest = {}
        if os.path.exists(manifest_path):
            with open(manifest_path, encoding="utf-8") as fh:
                self.manifest = json.load(fh)

    def stage(self, name, inputs, params, outputs, fn):
        digest = _hash_inputs(inputs, params)
        up_to_date = (
            not self.force
            and self.manifest.get(name, {}).get("hash") == digest
            and all(os.path.exists(p) for p in outputs)
        )
        if self.dry_run:
            print(f"{name}: {'skip (up to date)' if up_to_date else 'would run'}")
            return
        if up_to_date:
            print(f"{name}: up to date, skipping")
            return
        fn()
        self.manifest[name] = {"hash": digest, "outputs": outputs}
        os.makedirs(os.path.dirname(self.manifest_path) or ".", exist_ok=True)
        with open(self.manifest_path, "w", encoding="utf-8") as fh:
            json.dump(self.manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")


def cmd_run(args):
    with open(args.config, encoding="utf-8") as fh:
        cfg = json.load(fh)
    period = tuple(cfg["period"])
    if period[0] > period[1]:
        raise sampling.PlanError("config period start exceeds end")
    window = cfg.get("window_years", classify.DEFAULT_WINDOW_YEARS)
    if window < 0:
        raise sampling.PlanError("window_years must be >= 0")
    paths = cfg["paths"]
    seed = cfg.get("seed", 0)
    target = cfg["target_words"]
    workdir = paths.get("workdir", os.path.dirname(paths["records"]) or ".")
    manifest = os.path.join(workdir, "manifest.json")
    pipe = _Pipeline(manifest, force=args.force, dry_run=args.dry_run)

    index_dir = paths["index_dir"]

    def do_ingest():
        ns = argparse.Namespace(corpus=paths["corpus"], period=period, out=index_dir)
        cmd_ingest(ns)

    pipe.stage(
        "ingest",
        [paths["corpus"]],
        {"period": list(period)},
        [os.path.join(index_dir, "corpus.jsonl"), os.path.join(index_dir, "meta.json")],
        do_ingest,
    )

    def do_sample():
        ns = argparse.Namespace(
            corpus=index_dir,
            period=period,
            target_words=target,
            seed=seed,
            out=paths["plan"],
        )
        cmd_sample(ns)

    pipe.stage(
        "sample",
        [os.path.join(index_dir, "corpus.jsonl")] if not args.dry_run and os.path.exists(
            os.path.join(index_dir, "corpus.jsonl")
        ) else [paths["corpus"]],
        {"period": list(period), "target_words": target, "seed": seed},
        [paths["plan"]],
        do_sample,
    )

    def do_classify():
        ns = argparse.Namespace(
            corpus=index_dir,
            lexicon=paths["lexicon"],
            plan=paths["plan"],
            log=paths["log"],
            window=window,
            out=paths["records"],
            no_entry_out=paths.get("no_entry"),
        )
        cmd_classify(ns)

    pipe.stage(
        "classify",
        [paths["lexicon"], paths["log"]] + (
            [paths["plan"]] if os.path.exists(paths["plan"]) else []
        ),
        {"window": window},
        [paths["records"]],
        do_classify,
    )

    def do_report():
        ns = argparse.Namespace(
            corpus=index_dir,
            records=paths["records"],
            plan=paths["plan"],
            axis=None,
            age_split=cfg.get("age_split", 40),
            out_dir=paths["reports_dir"],
        )
        cmd_report(ns)

    pipe.stage(
        "report",
        [paths["records"]] if os.path.exists(paths["records"]) else [paths["log"]],
        {"axes": ["gender", "rank", "relationship"]},
        [os.path.join(paths["reports_dir"], "freq_gender.tsv")],
        do_report,
    )
    return 0


def build_parser():
    parser = _Parser(prog="neologia", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse and index a corpus JSONL file")
    p.add_argument("corpus")
    p.add_argument("--period", type=_parse_period, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_ingest)

    p = sub.add_parser("lexicon", help="validate or query a lexicon file")
    lex_sub = p.add_subparsers(dest="lexicon_cmd", required=True)
    v = lex_sub.add_parser("validate")
    v.add_argument("lexicon")
    v.set_defaults(fn=cmd_lexicon)
    q = lex_sub.add_parser("lookup")
    q.add_argument("form")
    q.add_argument("--lexicon", required=True)
    q.set_defaults(fn=cmd_lexicon)

    p = sub.add_parser("normalize", help="suggest lexicon mappings for forms")
    p.add_argument("forms", nargs="*")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--max-cost", type=float, default=2.5)
    p.add_argument("--rules")
    p.add_argument("--in", dest="infile")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_normalize)

    p = sub.add_parser("sample", help="draw a stratified letter sample")
    p.add_argument("--corpus", required=True)
    p.add_argument("--period", type=_parse_period, default=None)
    p.add_argument("--target-words", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("serve", help="run the review service")
    p.add_argument("--plan", required=True)
    p.add_argument("--log", required=True)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--bind", default="127.0.0.1:8417")
    p.add_argument("--ui-dir")
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("classify", help="apply decisions and the attestation window")
    p.add_argument("--plan", required=True)
    p.add_argument("--log", required=True)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--window", type=int, default=classify.DEFAULT_WINDOW_YEARS)
    p.add_argument("--out", required=True)
    p.add_argument("--no-entry-out")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("report", help="frequency tables over classified records")
    p.add_argument("--records", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--plan")
    p.add_argument(
        "--axis", choices=["gender", "rank", "relationship", "age"], default=None
    )
    p.add_argument("--age-split", type=int, default=40)
    p.add_argument("--out-dir")
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("run", help="run the whole pipeline from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--force", action="store_true")
    p.add_argument("--dry-run", action="store_true")
    p.set_defaults(fn=cmd_run)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DATA_ERRORS as exc:
        print(f"neologia: {exc}", file=sys.stderr)
        return DATA_EXIT


if __name__ == "__main__":
    sys.exit(main())
