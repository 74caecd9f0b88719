/** Browser entry point. Gateway origin defaults to the page's own origin
 * and can be overridden with ?gateway=http://host:port for development. */

import { GatewayClient } from './api.js';
import { ChatApp } from './app.js';
import { sessionId } from './session.js';

function boot(): void {
  const root = document.getElementById('app');
  if (!root) {
    throw new Error('missing #app container');
  }
  const params = new URLSearchParams(window.location.search);
  const base = params.get('gateway') ?? window.location.origin;
  new ChatApp({
    root,
    gateway: new GatewayClient(base),
    sessionId: sessionId(window.sessionStorage),
  });
}

if (document.readyState === 'loading') {
  document.addEventListener('DOMContentLoaded', boot);
} else {
  boot();
}
