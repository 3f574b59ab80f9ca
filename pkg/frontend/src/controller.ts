import { ApiClient, ApiError } from "./api.js";
import { ReviewQueue } from "./queue.js";
import type {
  CandidateView,
  DecisionBody,
  DecisionStatus,
  ProgressSummary,
} from "./types.js";

export interface Notice {
  kind: "info" | "error" | "offline";
  text: string;
}

const PAGE_SIZE = 50;

/**
 * Keyboard-driven review session. Digits accept the n-th suggestion,
 * "x" rejects, "n" marks no-entry, "u" undoes by returning to the last
 * decided candidate (the superseding decision is whatever comes next),
 * "j"/"k" navigate, "e" opens the manual-mapping editor.
 *
 * A decision that cannot reach the service is queued locally and
 * flushed before the next successful action; it is never dropped.
 */
export class ReviewController {
  queue = new ReviewQueue();
  progress: ProgressSummary | null = null;
  notice: Notice | null = null;
  editOpen = false;
  done = false;
  onChange: () => void = () => {};
  private offline: DecisionBody[] = [];

  constructor(
    private readonly api: ApiClient,
    private readonly reviewer: string = "reviewer",
  ) {}

  get offlineCount(): number {
    return this.offline.length;
  }

  get planChanged(): boolean {
    return this.api.planChanged;
  }

  async load(): Promise<void> {
    const items: CandidateView[] = [];
    let page = 0;
    for (;;) {
      const data = await this.api.candidates(page, PAGE_SIZE);
      items.push(...data.items);
      if ((page + 1) * PAGE_SIZE >= data.total) break;
      page += 1;
    }
    this.queue.load(items);
    this.progress = await this.api.progress();
    this.done = this.queue.pendingCount() === 0;
    this.onChange();
  }

  async handleKey(key: string): Promise<void> {
    if (this.editOpen && key !== "Escape") return;
    if (key >= "1" && key <= "9") {
      await this.acceptSuggestion(Number(key) - 1);
    } else if (key === "x") {
      await this.decide("rejected");
    } else if (key === "n") {
      await this.decide("no_entry");
    } else if (key === "u") {
      this.undo();
    } else if (key === "j") {
      this.queue.next();
      this.notice = null;
    } else if (key === "k") {
      this.queue.prev();
      this.notice = null;
    } else if (key === "e") {
      this.editOpen = true;
    } else if (key === "Escape") {
      this.editOpen = false;
    } else {
      return;
    }
    this.onChange();
  }

  async acceptSuggestion(index: number): Promise<void> {
    const item = this.queue.current();
    if (!item) return;
    const suggestion = item.suggestions[index];
    if (!suggestion) {
      this.notice = {
        kind: "error",
        text: `no suggestion #${index + 1} for this candidate (mark no-entry or edit)`,
      };
      return;
    }
    const body: DecisionBody = {
      candidate_key: item.candidate_key,
      status: "accepted",
      entry: { lemma: suggestion.lemma, pos: suggestion.pos },
      reviewer: this.reviewer,
    };
    const firstSense = suggestion.senses[0];
    if (firstSense) body.sense_id = firstSense.sense_id;
    await this.submit(body);
  }

  async decide(status: Exclude<DecisionStatus, "pending" | "accepted" | "edited">): Promise<void> {
    const item = this.queue.current();
    if (!item) return;
    await this.submit({
      candidate_key: item.candidate_key,
      status,
      reviewer: this.reviewer,
    });
  }

  async submitEdit(lemma: string, pos: string, senseId?: string): Promise<boolean> {
    const item = this.queue.current();
    if (!item) return false;
    const body: DecisionBody = {
      candidate_key: item.candidate_key,
      status: "edited",
      entry: { lemma, pos },
      reviewer: this.reviewer,
    };
    if (senseId) body.sense_id = senseId;
    const accepted = await this.submit(body);
    if (accepted) this.editOpen = false;
    this.onChange();
    return accepted;
  }

  undo(): void {
    const target = this.queue.undoTarget();
    this.notice =
      target === null
        ? { kind: "info", text: "nothing to undo" }
        : { kind: "info", text: "re-decide to supersede the previous verdict" };
  }

  /** Returns true when the decision was acknowledged by the service. */
  private async submit(body: DecisionBody): Promise<boolean> {
    await this.flushOffline();
    const index = this.queue.cursor;
    try {
      const stored = await this.api.postDecision(body);
      this.queue.markDecided(index, stored.status);
      this.notice = null;
    } catch (error) {
      if (error instanceof ApiError) {
        this.notice = { kind: "error", text: `${error.status}: ${error.message}` };
        return false;
      }
      // transport failure: keep the decision, retry on the next action
      this.offline.push(body);
      this.queue.markDecided(index, body.status);
      this.notice = {
        kind: "offline",
        text: `offline: ${this.offline.length} decision(s) queued locally`,
      };
      this.advance();
      return false;
    }
    await this.refreshProgress();
    this.advance();
    return true;
  }

  private advance(): void {
    if (!this.queue.advanceToPending()) this.done = true;
  }

  async flushOffline(): Promise<void> {
    while (this.offline.length > 0) {
      const body = this.offline[0]!;
      try {
        await this.api.postDecision(body);
      } catch (error) {
        if (error instanceof ApiError) {
          // the service rejected it outright; surface and drop from queue
          this.offline.shift();
          this.notice = {
            kind: "error",
            text: `queued decision rejected ${error.status}: ${error.message}`,
          };
          continue;
        }
        return; // still offline
      }
      this.offline.shift();
    }
  }

  private async refreshProgress(): Promise<void> {
    try {
      this.progress = await this.api.progress();
    } catch {
      // non-fatal: progress refreshes on the next decision
    }
  }
}
