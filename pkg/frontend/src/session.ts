/** Client-side session identity.
 *
 * The id lives in sessionStorage, so each browser tab is its own
 * conversation (handy for testing parallel sessions) while a reload
 * within a tab resumes the same gateway-side tracker.
 */

const KEY = 'wolofbot_session';

function randomId(): string {
  const rand =
    globalThis.crypto && 'randomUUID' in globalThis.crypto
      ? globalThis.crypto.randomUUID()
      : `${Date.now().toString(36)}-${Math.random().toString(36).slice(2, 10)}`;
  return `web-${rand}`;
}

export function sessionId(storage: Storage): string {
  const existing = storage.getItem(KEY);
  if (existing) {
    return existing;
  }
  const fresh = randomId();
  storage.setItem(KEY, fresh);
  return fresh;
}
