/** Chat application: composer, conversation pane and gateway wiring.
 *
 * Turn-taking mirrors the voicebot's: at most one in-flight request per
 * session, with the composer locked while the bot is replying. The app
 * keeps no dialogue state beyond the session id — reloading the page and
 * resuming the session continues from the gateway's tracker.
 */

import { GatewayClient } from './api.js';
import { asrEchoBubble, audioBubble, botTextBubble, buttonsBubble, el, userBubble } from './bubbles.js';
import type { ButtonSpec, InboundKind, OutboundMessage } from './types.js';

export interface ChatAppOptions {
  root: HTMLElement;
  gateway: GatewayClient;
  sessionId: string;
}

export class ChatApp {
  readonly messages: HTMLDivElement;
  readonly input: HTMLInputElement;
  readonly sendButton: HTMLButtonElement;
  readonly voiceToggle: HTMLInputElement;
  private busy = false;

  constructor(private readonly options: ChatAppOptions) {
    const { root } = options;
    this.messages = el('div', { class: 'wb-messages', 'aria-live': 'polite' });

    const composer = el('form', { class: 'wb-composer' });
    this.input = el('input', {
      class: 'wb-input',
      type: 'text',
      placeholder: 'Bindal sa laaj… (type your question)',
      autocomplete: 'off',
    });
    this.voiceToggle = el('input', { class: 'wb-voice-toggle', type: 'checkbox', id: 'wb-voice' });
    const voiceLabel = el('label', { for: 'wb-voice', class: 'wb-voice-label' }, '🎤 voice');
    this.sendButton = el('button', { class: 'wb-send', type: 'submit' }, 'Send');
    this.sendButton.disabled = true;

    composer.append(this.input, voiceLabel, this.voiceToggle, this.sendButton);
    root.append(this.messages, composer);

    this.input.addEventListener('input', () => this.refreshControls());
    composer.addEventListener('submit', (event) => {
      event.preventDefault();
      void this.sendCurrent();
    });
  }

  private refreshControls(): void {
    this.sendButton.disabled = this.busy || this.input.value.trim() === '';
    this.input.disabled = this.busy;
  }

  private setBusy(busy: boolean): void {
    this.busy = busy;
    this.refreshControls();
  }

  /** Send the composer content as text, or as simulated voice when the
   * microphone toggle is on (the typed transcript goes down the gateway's
   * ASR path and comes back as an "ASR :" echo bubble). */
  async sendCurrent(): Promise<void> {
    const content = this.input.value.trim();
    if (content === '' || this.busy) {
      return;
    }
    this.input.value = '';
    const kind: InboundKind = this.voiceToggle.checked ? 'voice' : 'text';
    await this.deliver(kind, content);
  }

  private async deliver(kind: InboundKind, payload: string, display?: string): Promise<void> {
    const bubble = userBubble(display ?? payload, kind === 'voice');
    this.messages.appendChild(bubble.element);
    bubble.onRetry(() => {
      bubble.setState('pending');
      void this.roundTrip(kind, payload, bubble.setState);
    });
    await this.roundTrip(kind, payload, bubble.setState);
  }

  private async roundTrip(
    kind: InboundKind,
    payload: string,
    setState: (state: 'pending' | 'delivered' | 'failed') => void,
  ): Promise<void> {
    this.setBusy(true);
    try {
      const replies = await this.options.gateway.send(this.options.sessionId, kind, payload);
      setState('delivered');
      this.renderReplies(replies);
    } catch {
      setState('failed');
    } finally {
      this.setBusy(false);
    }
  }

  /** Render bot messages strictly in gateway order. Audio bubbles mount
   * immediately (no await on the asset), so slow fetches never reorder. */
  private renderReplies(replies: OutboundMessage[]): void {
    for (const message of replies) {
      switch (message.kind) {
        case 'asr_echo':
          this.messages.appendChild(asrEchoBubble(message.body as string));
          break;
        case 'text':
          this.messages.appendChild(botTextBubble(message.body as string));
          break;
        case 'audio':
          this.messages.appendChild(
            audioBubble(this.options.gateway.audioUrl(message.body as string)),
          );
          break;
        case 'buttons': {
          const specs = message.body as ButtonSpec[];
          this.messages.appendChild(
            buttonsBubble(specs, (clicked) => {
              const title = specs.find((s) => s.payload === clicked)?.title;
              void this.deliver('postback', clicked, title);
            }),
          );
          break;
        }
      }
    }
  }
}
