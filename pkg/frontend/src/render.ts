import type { ReviewController } from "./controller.js";
import type { CandidateView, Suggestion } from "./types.js";
import { bucketString } from "./types.js";

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function highlightContext(view: CandidateView): string {
  const context = escapeHtml(view.context);
  const surface = escapeHtml(view.surface);
  const at = context.toLowerCase().indexOf(surface.toLowerCase());
  if (at === -1) return context;
  return (
    context.slice(0, at) +
    `<mark>${context.slice(at, at + surface.length)}</mark>` +
    context.slice(at + surface.length)
  );
}

function suggestionRow(suggestion: Suggestion, index: number, letterYear: number): string {
  const sense = suggestion.senses[0];
  const year = sense ? sense.year : null;
  const delta = year === null ? "" : String(letterYear - year);
  const badge =
    year !== null && year > letterYear
      ? '<span class="badge antedating">antedating</span>'
      : "";
  const gloss = sense ? escapeHtml(sense.gloss) : "";
  return `<tr>
    <td class="key">${index + 1}</td>
    <td><strong>${escapeHtml(suggestion.lemma)}</strong> <em>${suggestion.pos}</em></td>
    <td>${gloss}</td>
    <td>${year ?? "?"}</td>
    <td>Δ ${delta} ${badge}</td>
    <td class="method">${suggestion.method} ${suggestion.score.toFixed(2)}</td>
  </tr>`;
}

export function render(root: HTMLElement, controller: ReviewController): void {
  const view = controller.queue.current();
  const progress = controller.progress;
  const parts: string[] = [];

  if (controller.planChanged) {
    parts.push('<div class="banner error">plan changed on the server; reload the page</div>');
  }
  if (controller.notice) {
    parts.push(
      `<div class="banner ${controller.notice.kind}">${escapeHtml(controller.notice.text)}</div>`,
    );
  }
  if (progress) {
    const t = progress.totals;
    const decided = t.total - t.pending;
    parts.push(`<div id="progress">
      <div class="bar"><div class="fill" style="width:${t.total ? (100 * decided) / t.total : 0}%"></div></div>
      <span>${decided}/${t.total} decided · ${t.accepted} accepted · ${t.edited} edited · ${t.rejected} rejected · ${t.no_entry} no-entry</span>
    </div>`);
  }

  if (controller.done && controller.queue.pendingCount() === 0) {
    parts.push('<div class="banner info">queue complete: nothing pending</div>');
  }

  if (view) {
    const status = controller.queue.currentStatus() ?? view.effective_status;
    parts.push(`<div id="candidate" class="status-${status}">
      <header>
        <span class="form">${escapeHtml(view.candidate_key.form)}</span>
        <span class="meta">${escapeHtml(view.candidate_key.letter_id)} · ${view.letter_year} · ${escapeHtml(bucketString(view.bucket_key))}</span>
        <span class="status">${status}</span>
      </header>
      <blockquote>${highlightContext(view)}</blockquote>
      ${
        view.suggestions.length
          ? `<table id="suggestions"><tbody>${view.suggestions
              .map((s, i) => suggestionRow(s, i, view.letter_year))
              .join("")}</tbody></table>`
          : '<p class="empty">no lexicon match — press <b>n</b> for no-entry or <b>e</b> to map manually</p>'
      }
    </div>`);
  }

  if (controller.editOpen) {
    parts.push(`<div id="editor">
      <label>lemma <input id="edit-lemma" autofocus></label>
      <label>pos <select id="edit-pos">
        <option>noun</option><option>adjective</option><option>verb</option>
        <option>adverb</option><option>other</option>
      </select></label>
      <label>sense <input id="edit-sense" placeholder="s1 (optional)"></label>
      <button id="edit-save">save mapping</button>
      <span class="hint">Escape cancels; invalid mappings are rejected by the service</span>
    </div>`);
  }

  parts.push(`<footer>
    <b>1–9</b> accept suggestion · <b>x</b> reject · <b>n</b> no-entry ·
    <b>e</b> edit mapping · <b>u</b> undo (supersede) · <b>j/k</b> next/prev
  </footer>`);

  root.innerHTML = parts.join("\n");

  const save = root.querySelector<HTMLButtonElement>("#edit-save");
  if (save) {
    save.addEventListener("click", () => {
      const lemma = root.querySelector<HTMLInputElement>("#edit-lemma")?.value ?? "";
      const pos = root.querySelector<HTMLSelectElement>("#edit-pos")?.value ?? "noun";
      const sense = root.querySelector<HTMLInputElement>("#edit-sense")?.value || undefined;
      void controller.submitEdit(lemma, pos, sense);
    });
  }
}
