// Hash-based routing so every drill-down level is deep-linkable and a
// refresh reproduces the same view from the URL alone.

export type Route =
  | { view: "features" }
  | { view: "feature"; id: string }
  | { view: "file"; path: string }
  | { view: "entity"; key: string };

export function parseRoute(hash: string): Route {
  const clean = hash.replace(/^#\/?/, "");
  if (clean === "" || clean === "features") {
    return { view: "features" };
  }
  const [head, ...rest] = clean.split("/");
  const tail = decodeURIComponent(rest.join("/"));
  if (head === "features" && tail) {
    return { view: "feature", id: tail };
  }
  if (head === "files" && tail) {
    return { view: "file", path: tail };
  }
  if (head === "entities" && tail) {
    return { view: "entity", key: tail };
  }
  return { view: "features" };
}

export function featureHash(id: string): string {
  return `#/features/${encodeURIComponent(id)}`;
}

export function fileHash(path: string): string {
  return `#/files/${encodeURIComponent(path)}`;
}

export function entityHash(key: string): string {
  return `#/entities/${encodeURIComponent(key)}`;
}
