import { ApiClient } from "./api.js";
import { ReviewController } from "./controller.js";
import { render } from "./render.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app container");

const api = new ApiClient("");
const controller = new ReviewController(api, "ui");
controller.onChange = () => render(root, controller);

window.addEventListener("keydown", (event) => {
  const target = event.target as HTMLElement | null;
  if (target && (target.tagName === "INPUT" || target.tagName === "SELECT")) {
    if (event.key !== "Escape") return;
  }
  void controller.handleKey(event.key);
});

controller.load().catch((error) => {
  root.innerHTML = `<div class="banner error">failed to load queue: ${String(error)}</div>`;
});
