// Session state machine.  One in-flight request at a time; every field
// the UI shows is read straight off the last service payload.

import type { QgrassClient } from "./api.js";
import type { MutateResponse, SessionInfo } from "./types.js";
import type { ExchangeBadge, SeedView } from "./render.js";

export interface PreviewResult {
  position: number;
  response: MutateResponse;
}

export class ExplorerState {
  sessionId: string | null = null;
  info: SessionInfo | null = null;
  selected: number[] = [];
  badge: ExchangeBadge | null = null;
  preview: PreviewResult | null = null;
  pending = false;

  constructor(private readonly client: QgrassClient) {}

  get canUndo(): boolean {
    return this.info !== null && this.info.seed.history.length > 0;
  }

  view(): SeedView {
    if (!this.info) {
      throw new Error("no session yet");
    }
    return {
      info: this.info,
      selected: this.selected,
      badge: this.badge,
      pending: this.pending,
    };
  }

  private async refresh(): Promise<void> {
    if (!this.sessionId) throw new Error("no session yet");
    this.info = await this.client.getSession(this.sessionId);
  }

  private async locked<T>(action: () => Promise<T>): Promise<T> {
    if (this.pending) {
      throw new Error("a request is already in flight");
    }
    this.pending = true;
    try {
      return await action();
    } finally {
      this.pending = false;
    }
  }

  async start(m: number, n: number): Promise<void> {
    await this.locked(async () => {
      const created = await this.client.createSession(m, n);
      this.sessionId = created.id;
      this.selected = [];
      this.badge = null;
      this.preview = null;
      await this.refresh();
    });
  }

  isMutable(position: number): boolean {
    return this.info?.mutablePositions.includes(position) ?? false;
  }

  /** Click on a mutable vertex: mutate and re-render; geometric exchanges
   * set the relabel badge. Clicks on frozen vertices select instead. */
  async clickVertex(position: number): Promise<void> {
    if (!this.isMutable(position)) {
      this.toggleSelect(position);
      return;
    }
    await this.locked(async () => {
      const before = this.info?.seed.positions[position - 1]?.label ?? null;
      const response = await this.client.mutate(this.sessionId!, position);
      this.badge =
        response.geometricExchange && response.newLabel
          ? { position, from: before, to: response.newLabel }
          : null;
      this.preview = null;
      await this.refresh();
    });
  }

  toggleSelect(position: number): void {
    if (this.selected.includes(position)) {
      this.selected = this.selected.filter((p) => p !== position);
    } else {
      this.selected = [...this.selected, position].slice(-2);
    }
  }

  async undo(): Promise<void> {
    if (!this.canUndo) {
      throw new Error("undo is disabled");
    }
    await this.locked(async () => {
      await this.client.undo(this.sessionId!);
      this.badge = null;
      this.preview = null;
      await this.refresh();
    });
  }

  /** What-if preview: fetch the mutation result without keeping it (the
   * service applies it and is immediately rolled back with undo, all while
   * this client is locked). */
  async previewMutation(position: number): Promise<PreviewResult> {
    return this.locked(async () => {
      const response = await this.client.mutate(this.sessionId!, position);
      await this.client.undo(this.sessionId!);
      this.preview = { position, response };
      return this.preview;
    });
  }

  /** Commit the previewed mutation for real. */
  async commitPreview(): Promise<void> {
    const preview = this.preview;
    if (!preview) {
      throw new Error("nothing to commit");
    }
    this.preview = null;
    await this.clickVertex(preview.position);
  }

  async lambdaOf(a: number, b: number): Promise<number> {
    return this.locked(() => this.client.quasiCommutation(this.sessionId!, a, b));
  }
}
