/** Thin fetch wrapper over the lab service's JSON API. */

import type { GradeDoc, IssueDoc, StatsDoc, TemplateDoc } from "./types";

export class ApiError extends Error {
  constructor(
    public readonly code: string,
    message: string,
    public readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class LabApi {
  constructor(private readonly base: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await fetch(this.base + path, init);
    const doc = await response.json();
    if (!response.ok) {
      throw new ApiError(
        typeof doc.code === "string" ? doc.code : "internal",
        typeof doc.message === "string" ? doc.message : "request failed",
        response.status,
      );
    }
    return doc as T;
  }

  async createSession(): Promise<string> {
    const doc = await this.request<{ session_id: string }>("POST", "/sessions");
    return doc.session_id;
  }

  getTemplate(kind: string): Promise<TemplateDoc> {
    return this.request<TemplateDoc>("GET", `/instruments/${kind}/template`);
  }

  issueExercise(sessionId: string, kind: string): Promise<IssueDoc> {
    return this.request<IssueDoc>("POST", `/sessions/${sessionId}/exercises`, { kind });
  }

  submitAnswer(sessionId: string, exerciseId: string, text: string): Promise<GradeDoc> {
    return this.request<GradeDoc>(
      "POST",
      `/sessions/${sessionId}/exercises/${exerciseId}/answer`,
      { text },
    );
  }

  getStats(sessionId: string): Promise<StatsDoc> {
    return this.request<StatsDoc>("GET", `/sessions/${sessionId}/stats`);
  }
}
