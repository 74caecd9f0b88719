/** Thin client for the gateway's documented HTTP API — the only state it
 * shares with the server is the session id. */

import type { InboundKind, OutboundMessage, WebhookResponse } from './types.js';

export class GatewayClient {
  constructor(readonly baseUrl: string) {}

  /** POST one inbound event; resolves to the bot's ordered messages. */
  async send(sessionId: string, kind: InboundKind, payload: string): Promise<OutboundMessage[]> {
    const response = await fetch(`${this.baseUrl}/webhook`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ session_id: sessionId, kind, payload }),
    });
    if (!response.ok) {
      throw new Error(`gateway error ${response.status}`);
    }
    const data = (await response.json()) as WebhookResponse;
    return data.messages;
  }

  /** Absolute URL for an audio body like "/audio/greet". */
  audioUrl(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  async health(): Promise<{ status: string; sessions: number }> {
    const response = await fetch(`${this.baseUrl}/health`);
    if (!response.ok) {
      throw new Error(`gateway error ${response.status}`);
    }
    return response.json();
  }
}
