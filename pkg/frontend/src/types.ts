/** Wire types of the gateway HTTP API. */

export type InboundKind = 'text' | 'voice' | 'postback';

export type OutboundKind = 'text' | 'audio' | 'buttons' | 'asr_echo';

export interface ButtonSpec {
  title: string;
  payload: string;
}

export interface OutboundMessage {
  kind: OutboundKind;
  /** text / asr_echo: string; audio: URL path; buttons: 1-3 button specs */
  body: string | ButtonSpec[];
}

export interface WebhookResponse {
  messages: OutboundMessage[];
}

export type Sender = 'user' | 'bot';

export type DeliveryState = 'pending' | 'delivered' | 'failed';
