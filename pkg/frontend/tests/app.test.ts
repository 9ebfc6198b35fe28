import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { renderRoute, startApp } from "../src/main.js";
import { parseRoute } from "../src/router.js";
import type { FeatureDetail, FeatureSummary } from "../src/api.js";
import {
  fixture,
  freshApp,
  installBrokenApi,
  installRecordedApi,
  settled,
  texts,
} from "./helpers.js";

let app: HTMLElement;

beforeEach(() => {
  app = freshApp();
  window.location.hash = "";
  installRecordedApi();
});

describe("deep links", () => {
  it("renders the ranked table from a fresh load at #/features", async () => {
    window.location.hash = "#/features";
    startApp(app, new ApiClient());
    await settled();
    const payload = fixture<FeatureSummary[]>("features");
    expect(texts(app, ".feature-name")).toEqual(payload.map((f) => f.name));
    expect(texts(app, ".feature-total")).toEqual(
      payload.map((f) => String(f.total)),
    );
  });

  it("reloads feature detail from the URL alone", async () => {
    window.location.hash = "#/features/relatorio";
    startApp(app, new ApiClient());
    await settled();
    expect(app.querySelector("h2")?.textContent).toBe("Relatorio");
    expect(app.querySelector(".feature-total")?.textContent).toBe("3");
  });

  it("reloads file detail with encoded slashes", async () => {
    window.location.hash = `#/files/${encodeURIComponent("fx/Turma.java")}`;
    startApp(app, new ApiClient());
    await settled();
    expect(app.querySelector("h2")?.textContent).toBe("fx/Turma.java");
  });

  it("reloads entity detail with hash and parens in the key", async () => {
    const key = "fx.Turma#validar(Aluno)";
    window.location.hash = `#/entities/${encodeURIComponent(key)}`;
    startApp(app, new ApiClient());
    await settled();
    expect(app.querySelector("h2")?.textContent).toBe(key);
    expect(
      app.querySelector('tr[data-metric="ATFD"] .metric-value')?.textContent,
    ).toBe("6");
  });

  it("navigating by hashchange re-renders", async () => {
    window.location.hash = "#/features";
    startApp(app, new ApiClient());
    await settled();
    window.location.hash = "#/features/matricula";
    window.dispatchEvent(new Event("hashchange"));
    await settled();
    expect(app.querySelector("h2")?.textContent).toBe("Matricula");
    expect(app.querySelector(".feature-total")?.textContent).toBe("2");
  });
});

describe("failure states", () => {
  it("unknown ids render the not-found view", async () => {
    await renderRoute(app, new ApiClient(), {
      view: "feature",
      id: "does-not-exist",
    });
    expect(app.querySelector(".not-found")).not.toBeNull();
    expect(app.textContent).toContain("does-not-exist");
  });

  it("an unreachable API shows the error banner, never a blank screen", async () => {
    installBrokenApi();
    await renderRoute(app, new ApiClient(), parseRoute("#/features"));
    const banner = app.querySelector(".error-banner");
    expect(banner).not.toBeNull();
    expect(app.textContent).toContain("unreachable");
  });
});

describe("value fidelity", () => {
  it("every number shown in feature detail is byte-equal to an API field", async () => {
    const payload = fixture<FeatureDetail>("feature-relatorio");
    await renderRoute(app, new ApiClient(), {
      view: "feature",
      id: "relatorio",
    });
    expect(app.querySelector(".feature-total")?.textContent).toBe(
      String(payload.total),
    );
    for (const row of app.querySelectorAll<HTMLElement>("tr.type-row")) {
      const type = row.dataset.type as string;
      expect(row.querySelector(".type-count")?.textContent).toBe(
        String(payload.per_type[type]),
      );
    }
    for (const row of app.querySelectorAll<HTMLElement>("tr.file-row")) {
      const path = row.dataset.path as string;
      expect(row.querySelector(".file-count")?.textContent).toBe(
        String(payload.per_file[path]),
      );
    }
  });
});
