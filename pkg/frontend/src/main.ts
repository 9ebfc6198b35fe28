// Application shell: resolve the current hash route against the API and
// render into #app. Refreshing any deep link reproduces the same view.

import { ApiClient, NotFoundError } from "./api.js";
import { parseRoute, Route } from "./router.js";
import {
  renderEntityDetail,
  renderErrorBanner,
  renderFeatureDetail,
  renderFeatureTable,
  renderFileDetail,
  renderNotFound,
} from "./views.js";

export async function renderRoute(
  container: HTMLElement,
  api: ApiClient,
  route: Route,
): Promise<void> {
  try {
    if (route.view === "features") {
      renderFeatureTable(container, await api.getFeatures());
    } else if (route.view === "feature") {
      renderFeatureDetail(container, await api.getFeature(route.id));
    } else if (route.view === "file") {
      renderFileDetail(container, await api.getFile(route.path));
    } else {
      renderEntityDetail(container, await api.getEntity(route.key));
    }
  } catch (err) {
    if (err instanceof NotFoundError) {
      renderNotFound(container, describe(route));
    } else {
      renderErrorBanner(
        container,
        "The analysis API is unreachable. Is `featdebt serve` running?",
      );
    }
  }
}

function describe(route: Route): string {
  switch (route.view) {
    case "feature":
      return `Feature "${route.id}"`;
    case "file":
      return `File "${route.path}"`;
    case "entity":
      return `Entity "${route.key}"`;
    default:
      return "Resource";
  }
}

export function startApp(container: HTMLElement, api: ApiClient): void {
  const rerender = () =>
    void renderRoute(container, api, parseRoute(window.location.hash));
  window.addEventListener("hashchange", rerender);
  rerender();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  startApp(document.getElementById("app")!, new ApiClient());
}
