import type { CandidateView, DecisionStatus } from "./types.js";
import { keyString } from "./types.js";

/**
 * In-memory review queue: the full candidate list in plan order plus a
 * local status overlay that tracks decisions as they are acknowledged.
 * The cursor always sits on the candidate being reviewed; after a
 * decision it advances to the next pending one.
 */
export class ReviewQueue {
  items: CandidateView[] = [];
  cursor = 0;
  private statuses = new Map<string, DecisionStatus>();
  private history: number[] = [];

  load(items: CandidateView[]): void {
    this.items = items;
    this.statuses.clear();
    for (const item of items) {
      this.statuses.set(keyString(item.candidate_key), item.effective_status);
    }
    this.cursor = 0;
    this.history = [];
    if (this.statusAt(0) !== "pending") this.advanceToPending();
  }

  statusAt(index: number): DecisionStatus | null {
    const item = this.items[index];
    if (!item) return null;
    return this.statuses.get(keyString(item.candidate_key)) ?? item.effective_status;
  }

  current(): CandidateView | null {
    return this.items[this.cursor] ?? null;
  }

  currentStatus(): DecisionStatus | null {
    return this.statusAt(this.cursor);
  }

  pendingCount(): number {
    let count = 0;
    for (const item of this.items) {
      if (this.statuses.get(keyString(item.candidate_key)) === "pending") count += 1;
    }
    return count;
  }

  markDecided(index: number, status: DecisionStatus): void {
    const item = this.items[index];
    if (!item) return;
    this.statuses.set(keyString(item.candidate_key), status);
    this.history.push(index);
  }

  /** Move to the next pending candidate at or after the cursor, wrapping. */
  advanceToPending(): boolean {
    const n = this.items.length;
    for (let step = 1; step <= n; step += 1) {
      const index = (this.cursor + step) % n;
      if (this.statusAt(index) === "pending") {
        this.cursor = index;
        return true;
      }
    }
    return false;
  }

  next(): void {
    if (this.cursor + 1 < this.items.length) this.cursor += 1;
  }

  prev(): void {
    if (this.cursor > 0) this.cursor -= 1;
  }

  /**
   * Undo: jump back to the most recently decided candidate so the next
   * decision supersedes it (the log itself is never mutated).
   */
  undoTarget(): number | null {
    const index = this.history.pop();
    if (index === undefined) return null;
    this.cursor = index;
    return index;
  }
}
