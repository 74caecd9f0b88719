/** Scripted browser test: drives the published screenshot dialogue through
 * the real DOM components against a live gateway — voice message, ASR echo
 * bubble, audio reply with a playable widget, quick-reply click, next
 * prompt. Ordering and the three-button rendering assert exactly.
 */

import { spawn, type ChildProcess } from 'node:child_process';
import { afterAll, beforeAll, beforeEach, describe, expect, it, vi } from 'vitest';

import { GatewayClient } from '../src/api.js';
import { ChatApp } from '../src/app.js';
import { audioBubble } from '../src/bubbles.js';
import { sessionId } from '../src/session.js';

const PORT = 8732;
const BASE = `http://127.0.0.1:${PORT}`;
const FIG1_QUESTION = 'naka la ma xoole sama poñ yi';
const HELP_PROMPT = 'Ci ban fàan lañ la mëna dimbalé ?';
const FOLLOW_UP = 'Ndax nga yenen laaj si Sargal?';

let gateway: ChildProcess;

async function waitForHealth(): Promise<void> {
  const deadline = Date.now() + 45_000;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/health`);
      if (response.ok && (await response.json()).status === 'ok') {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error('gateway did not become healthy');
}

beforeAll(async () => {
  gateway = spawn('python3', ['tests/start_gateway.py', '--port', String(PORT)], {
    stdio: 'inherit',
  });
  await waitForHealth();
});

afterAll(async () => {
  if (!gateway) {
    return;
  }
  const gone = new Promise((resolve) => gateway.once('exit', resolve));
  gateway.kill();
  await Promise.race([gone, new Promise((resolve) => setTimeout(resolve, 2000))]);
  if (gateway.exitCode === null) {
    gateway.kill('SIGKILL');
  }
});

function freshApp(id: string): { app: ChatApp; root: HTMLElement } {
  const root = document.createElement('div');
  document.body.appendChild(root);
  const app = new ChatApp({ root, gateway: new GatewayClient(BASE), sessionId: id });
  return { app, root };
}

function bubbleKinds(root: HTMLElement): string[] {
  return [...root.querySelectorAll<HTMLElement>('.wb-bubble')].map(
    (b) => `${b.classList.contains('wb-user') ? 'user' : 'bot'}:${b.dataset.kind}`,
  );
}

function bubbleTexts(root: HTMLElement): string[] {
  return [...root.querySelectorAll<HTMLElement>('.wb-bubble .wb-text')].map(
    (t) => t.textContent ?? '',
  );
}

async function type(app: ChatApp, text: string, voice: boolean): Promise<void> {
  app.voiceToggle.checked = voice;
  app.input.value = text;
  app.input.dispatchEvent(new Event('input', { bubbles: true }));
  await app.sendCurrent();
}

beforeEach(() => {
  document.body.innerHTML = '';
  // jsdom has no media playback; resolve so the play control works
  vi.spyOn(window.HTMLMediaElement.prototype, 'play').mockResolvedValue(undefined);
});

describe('screenshot dialogue end to end', () => {
  it('voice question → ASR echo → audio reply → buttons → next prompt', async () => {
    const { app, root } = freshApp(`fig1-${Date.now()}`);

    await type(app, FIG1_QUESTION, true);

    // strict on-screen order: user turn, greeting (audio+text), ASR echo,
    // points answer (audio + split transcripts), follow-up (audio + text + buttons)
    expect(bubbleKinds(root)).toEqual([
      'user:voice',
      'bot:audio',
      'bot:text',
      'bot:asr_echo',
      'bot:audio',
      'bot:text',
      'bot:text',
      'bot:audio',
      'bot:text',
      'bot:buttons',
    ]);

    const texts = bubbleTexts(root);
    expect(texts[0]).toBe(FIG1_QUESTION);
    expect(texts.some((t) => t === `ASR : ${FIG1_QUESTION}`)).toBe(true);
    expect(texts.some((t) => t.includes('défal #221*1*1#'))).toBe(true);
    expect(texts.some((t) => t.includes(FOLLOW_UP))).toBe(true);

    // every audio bubble exposes a play control; clicking starts playback
    const players = root.querySelectorAll<HTMLButtonElement>('.wb-play');
    expect(players.length).toBe(3);
    players[0].click();
    expect(window.HTMLMediaElement.prototype.play).toHaveBeenCalled();

    // exactly three quick-reply buttons with the published titles/payloads
    const buttons = [...root.querySelectorAll<HTMLButtonElement>('.wb-quick-reply')];
    expect(buttons.map((b) => b.textContent)).toEqual(['WAAW', 'DÉDÉT', 'TAMBALI BI']);
    expect(buttons.map((b) => b.dataset.payload)).toEqual(['AFFIRM', 'DENY', 'HOME']);

    // WAAW → help prompt, button group disabled
    buttons[0].click();
    await vi.waitFor(() => {
      expect(bubbleTexts(root).some((t) => t === HELP_PROMPT)).toBe(true);
    });
    expect(buttons.every((b) => b.disabled)).toBe(true);
    expect(buttons[0].classList.contains('wb-selected')).toBe(true);
  });

  it('double-clicking a quick reply sends exactly one postback', async () => {
    const id = `debounce-${Date.now()}`;
    const { app, root } = freshApp(id);
    const spy = vi.spyOn(GatewayClient.prototype, 'send');

    await type(app, FIG1_QUESTION, false);
    const waaw = root.querySelector<HTMLButtonElement>('.wb-quick-reply')!;
    waaw.click();
    waaw.click();
    await vi.waitFor(() => {
      expect(bubbleTexts(root).some((t) => t === HELP_PROMPT)).toBe(true);
    });
    const postbacks = spy.mock.calls.filter(([, kind]) => kind === 'postback');
    expect(postbacks).toEqual([[id, 'postback', 'AFFIRM']]);
  });
});

describe('composer behavior', () => {
  it('send stays disabled for empty input and while the bot replies', async () => {
    const { app } = freshApp(`composer-${Date.now()}`);
    expect(app.sendButton.disabled).toBe(true);

    app.input.value = '  ';
    app.input.dispatchEvent(new Event('input', { bubbles: true }));
    expect(app.sendButton.disabled).toBe(true);

    app.input.value = 'salaamaalekum';
    app.input.dispatchEvent(new Event('input', { bubbles: true }));
    expect(app.sendButton.disabled).toBe(false);

    const pending = app.sendCurrent();
    expect(app.input.disabled).toBe(true); // locked during the bot turn
    await pending;
    expect(app.input.disabled).toBe(false);
  });

  it('text messages do not produce an ASR bubble', async () => {
    const { app, root } = freshApp(`text-${Date.now()}`);
    await type(app, 'lan mooy sargal', false);
    expect(bubbleKinds(root).filter((k) => k.endsWith('asr_echo'))).toEqual([]);
  });
});

describe('failure handling', () => {
  it('network failure marks the bubble failed with a retry control', async () => {
    const root = document.createElement('div');
    document.body.appendChild(root);
    const app = new ChatApp({
      root,
      gateway: new GatewayClient('http://127.0.0.1:1'), // nothing listens here
      sessionId: 'down',
    });
    await type(app, 'waaw', false);
    const badge = root.querySelector('.wb-state')!;
    expect(badge.getAttribute('data-state')).toBe('failed');
    const retry = root.querySelector<HTMLButtonElement>('.wb-retry')!;
    expect(retry.hidden).toBe(false);
  });

  it('retry after failure delivers against the live gateway', async () => {
    const id = `retry-${Date.now()}`;
    const { app, root } = freshApp(id);
    const spy = vi
      .spyOn(GatewayClient.prototype, 'send')
      .mockRejectedValueOnce(new Error('boom'));
    await type(app, 'salaamaalekum', false);
    expect(root.querySelector('.wb-state')!.getAttribute('data-state')).toBe('failed');
    spy.mockRestore();

    root.querySelector<HTMLButtonElement>('.wb-retry')!.click();
    await vi.waitFor(() => {
      expect(root.querySelector('.wb-state')!.getAttribute('data-state')).toBe('delivered');
    });
    expect(bubbleKinds(root).filter((k) => k.startsWith('bot:')).length).toBeGreaterThan(0);
  });

  it('missing audio shows an inline error and keeps transcripts readable', async () => {
    const root = document.createElement('div');
    document.body.appendChild(root);
    const bubble = audioBubble(`${BASE}/audio/does-not-exist`);
    root.appendChild(bubble);
    bubble.querySelector('audio')!.dispatchEvent(new Event('error'));
    const error = bubble.querySelector<HTMLElement>('.wb-audio-error')!;
    expect(error.hidden).toBe(false);
    expect(bubble.querySelector<HTMLButtonElement>('.wb-play')!.disabled).toBe(true);
  });

  it('the audio asset itself is fetchable from the gateway', async () => {
    const response = await fetch(`${BASE}/audio/points_balance`);
    expect(response.status).toBe(200);
    expect(response.headers.get('content-type')).toBe('audio/wav');
    expect((await response.arrayBuffer()).byteLength).toBeGreaterThan(1000);
  });

  it('replay after completion restarts from 0', () => {
    const bubble = audioBubble(`${BASE}/audio/greet`);
    document.body.appendChild(bubble);
    const audio = bubble.querySelector('audio')!;
    const play = bubble.querySelector<HTMLButtonElement>('.wb-play')!;
    play.click();
    audio.currentTime = 3;
    audio.dispatchEvent(new Event('ended'));
    expect(play.textContent).toBe('▶');
    play.click();
    expect(audio.currentTime).toBe(0);
  });
});

describe('session identity', () => {
  it('persists per tab and resumes the gateway tracker after reload', async () => {
    const id = sessionId(window.sessionStorage);
    expect(sessionId(window.sessionStorage)).toBe(id); // stable within the tab

    const first = freshApp(id);
    await type(first.app, FIG1_QUESTION, false);
    expect(bubbleTexts(first.root).some((t) => t.includes('Salaamaalekum'))).toBe(true);

    // "reload": new DOM, same session id — no second greeting, flow continues
    document.body.innerHTML = '';
    const second = freshApp(id);
    await type(second.app, 'waaw', false);
    const texts = bubbleTexts(second.root);
    expect(texts.some((t) => t.includes('Salaamaalekum'))).toBe(false);
    expect(texts.some((t) => t === HELP_PROMPT)).toBe(true);
  });
});
