/** Chat bubble components.
 *
 * Bubbles render in strict arrival order; the caller appends them to the
 * conversation container as messages come back from the gateway. Content
 * is set via textContent (XSS safe). Audio bubbles always expose a play
 * control; ASR debug bubbles are prefixed "ASR :".
 */

import type { ButtonSpec, DeliveryState, Sender } from './types.js';

type Attrs = Record<string, string>;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Attrs = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [name, value] of Object.entries(attrs)) {
    node.setAttribute(name, value);
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function bubbleShell(sender: Sender, kind: string): HTMLDivElement {
  return el('div', { class: `wb-bubble wb-${sender} wb-kind-${kind}`, 'data-kind': kind });
}

export interface UserBubble {
  element: HTMLDivElement;
  setState(state: DeliveryState): void;
  onRetry(handler: () => void): void;
}

/** Right-aligned user bubble with a delivery badge and a retry control
 * that appears only in the failed state. */
export function userBubble(content: string, voice: boolean): UserBubble {
  const element = bubbleShell('user', voice ? 'voice' : 'text');
  if (voice) {
    element.appendChild(el('span', { class: 'wb-voice-mark', title: 'simulated voice' }, '🎤 '));
  }
  element.appendChild(el('span', { class: 'wb-text' }, content));
  const badge = el('span', { class: 'wb-state', 'data-state': 'pending' }, '…');
  element.appendChild(badge);
  const retry = el('button', { class: 'wb-retry', type: 'button', hidden: '' }, 'retry');
  element.appendChild(retry);

  let retryHandler: (() => void) | null = null;
  retry.addEventListener('click', () => retryHandler?.());

  return {
    element,
    setState(state: DeliveryState) {
      badge.setAttribute('data-state', state);
      badge.textContent = state === 'pending' ? '…' : state === 'delivered' ? '✓' : '✗';
      element.classList.toggle('wb-failed', state === 'failed');
      retry.hidden = state !== 'failed';
    },
    onRetry(handler: () => void) {
      retryHandler = handler;
    },
  };
}

export function botTextBubble(content: string): HTMLDivElement {
  const element = bubbleShell('bot', 'text');
  element.appendChild(el('span', { class: 'wb-text' }, content));
  return element;
}

export function asrEchoBubble(transcript: string): HTMLDivElement {
  const element = bubbleShell('bot', 'asr_echo');
  element.appendChild(el('span', { class: 'wb-text' }, `ASR : ${transcript}`));
  return element;
}

/** Audio reply with play/replay control and progress. A fetch/decoding
 * failure shows an inline error badge; transcripts are separate text
 * bubbles, so they stay readable either way. */
export function audioBubble(url: string): HTMLDivElement {
  const element = bubbleShell('bot', 'audio');
  const audio = el('audio', { src: url, preload: 'none', class: 'wb-audio' });
  const play = el('button', { class: 'wb-play', type: 'button', 'aria-label': 'play audio' }, '▶');
  const progress = el('span', { class: 'wb-progress' }, '0:00');
  const error = el('span', { class: 'wb-audio-error', hidden: '' }, 'audio unavailable');
  element.append(audio, play, progress, error);

  const fail = () => {
    error.hidden = false;
    play.disabled = true;
  };
  audio.addEventListener('error', fail);

  let finished = false;
  audio.addEventListener('timeupdate', () => {
    const seconds = Math.floor(audio.currentTime);
    progress.textContent = `${Math.floor(seconds / 60)}:${String(seconds % 60).padStart(2, '0')}`;
  });
  audio.addEventListener('ended', () => {
    finished = true;
    play.textContent = '▶';
  });

  play.addEventListener('click', () => {
    if (finished) {
      audio.currentTime = 0; // replay restarts from the beginning
      finished = false;
    }
    try {
      const result = audio.play();
      if (result && typeof result.catch === 'function') {
        result.catch(fail);
      }
      play.textContent = '❚❚';
    } catch {
      fail();
    }
  });
  return element;
}

/** Quick-reply buttons. The whole group disables on first click and the
 * handler fires exactly once, so double clicks send a single postback. */
export function buttonsBubble(
  buttons: ButtonSpec[],
  onClick: (payload: string) => void,
): HTMLDivElement {
  const element = bubbleShell('bot', 'buttons');
  const group = el('div', { class: 'wb-button-group', role: 'group' });
  let used = false;
  for (const spec of buttons) {
    const button = el('button', {
      class: 'wb-quick-reply',
      type: 'button',
      'data-payload': spec.payload,
    });
    button.textContent = spec.title;
    button.addEventListener('click', () => {
      if (used) {
        return;
      }
      used = true;
      for (const b of group.querySelectorAll<HTMLButtonElement>('button')) {
        b.disabled = true;
      }
      button.classList.add('wb-selected');
      onClick(spec.payload);
    });
    group.appendChild(button);
  }
  element.appendChild(group);
  return element;
}
