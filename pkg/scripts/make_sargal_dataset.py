#!/usr/bin/env python3
"""Build the bundled synthetic Sargal intent dataset.

The utterances below are hand-written synthetic Wolof (with the usual
French code-switching); they are NOT field data. The set is shaped like a
small call-center corpus: 9 intent classes, ~20 examples each, 184 total.

Writes src/wolofbot/data/sargal_nlu.json.
"""

from __future__ import annotations

import json
from pathlib import Path

INTENTS: dict[str, list[str]] = {
    "greet": [
        "salaamaalekum",
        "asalaa maalekum",
        "salaamaalekum wa rahmatullah",
        "nanga def",
        "na nga def",
        "naka nga def",
        "jaam nga am",
        "jaam nga fanane",
        "naka suba si",
        "naka ngeen def",
        "salut nanga def",
        "bonjour naka nga def",
        "maangi lay nuyu",
        "nuyu naa la",
        "naka mu",
        "naka wa kër gi",
        "mbaa jaam nga fanane",
        "salaamaalekum naka nga def",
        "hey naka nga def",
        "bonjour maangi lay nuyu",
    ],
    "goodbye": [
        "ba beneen yoon",
        "ba ci kanam",
        "ba suba ak jaam",
        "mangi dem",
        "maangi dem ba beneen",
        "jërëjëf ba beneen yoon",
        "jërëjëf ci lépp ba ci kanam",
        "ba beneen inchallah",
        "jaam ak salaam ba beneen",
        "au revoir ba beneen yoon",
        "ciao ba ci kanam",
        "dinaa dellusi ba beneen yoon",
        "baax na jërëjëf mangi dem",
        "léegi mangi dem",
        "ba beneen yoon sama xarit",
        "jërëjëf bu baax ba suba",
        "yendul ak jaam",
        "fanaanal ak jaam",
        "jaam nga yendu ba beneen",
        "noo ko bokk ba beneen",
    ],
    "affirm": [
        "waaw",
        "waaw waaw",
        "waaw kay",
        "waaw dëgg la",
        "dëgg la",
        "baax na",
        "waaw baax na",
        "exact waaw",
        "waaw loolu la",
        "waaw am naa beneen laaj",
        "waaw bëgg naa laaj beneen",
        "oui waaw",
        "waaw ndax mën naa laaj yeneen",
        "waaw kay am naa yeneen laaj",
        "loolu la waaw",
        "waaw jox ma beneen",
        "waaw wóor na",
        "wóor na waaw",
        "waaw tamit",
        "mën naa am beneen laaj waaw",
        "waaw damaa bëgg beneen laaj",
    ],
    "deny": [
        "dédét",
        "déedéet",
        "dédét jërëjëf",
        "dédét du dara",
        "du dara",
        "bañ naa",
        "dédét bañ naa",
        "non dédét",
        "dédét amatuma laaj",
        "amatuma laaj",
        "dédét loolu doy na",
        "doy na dédét",
        "déet",
        "déet déet",
        "dédét amuma beneen laaj",
        "amuma beneen laaj",
        "dédét noppi naa",
        "dédét doy na jërëjëf",
        "soxlawuma dara dédét",
        "dédét soxlawuma dara",
        "dédét baaxul",
    ],
    "check_points": [
        "naka la ma xoole sama poñ yi",
        "naka laa mëna xoole sama poñ yi",
        "bëgg naa xool sama poñ yi",
        "ñaata poñ laa am",
        "bëgg naa xam ñaata poñ laa am",
        "wone ma sama poñ yi",
        "xool ma sama poñ sargal",
        "sama poñ yi ñaata lañu",
        "fan laa mëna xoole sama poñ yi",
        "naka lañuy xoole poñ yi",
        "mën nga ma wone sama poñ yi",
        "bëgg naa seet sama poñ yi",
        "seetal ma sama poñ yi",
        "sama solde poñ ñaata la",
        "solde sama poñ sargal",
        "consulter sama poñ yi",
        "naka la ma xoole poñ yi ma am ci sargal",
        "xoolal ma ñaata poñ laa dajale",
        "ñaata poñ laa dajale ba léegi",
        "wone ma ñaata poñ laa am ci sargal",
        "naka laa xoole sama poñ",
    ],
    "earn_points": [
        "naka laa mëna ame poñ",
        "naka lañuy ame poñ yi",
        "lan laa wara def ngir am poñ",
        "naka laa mëna dajale poñ",
        "naka lay dajale poñ ci sargal",
        "lan moy may ma poñ",
        "naka lañuy gagner poñ",
        "gagner poñ naka la",
        "naka laa mëna yokk sama poñ",
        "yokk sama poñ yi naka la",
        "ndax woote yi dañuy joxe poñ",
        "ndax internet bi dafay may poñ",
        "lu may joxe poñ ci sargal",
        "naka lañuy jëlee poñ",
        "bëgg naa am poñ yu bari naka la",
        "lan laa wara def ba am poñ yu bari",
        "naka lay def ba sama poñ yokk",
        "def lan ngir dajale poñ",
        "naka lañuy ame poñ ci woote ak sms",
        "lu ma wara def ngir gagner poñ",
    ],
    "redeem_points": [
        "bëgg naa jëfandikoo sama poñ yi",
        "naka laa mëna jëfandikoo sama poñ",
        "naka laa mëna weccee sama poñ yi",
        "weccee sama poñ yi naka la",
        "lan laa mëna jënd ak sama poñ yi",
        "bëgg naa jënd crédit ak sama poñ",
        "mën naa weccee sama poñ ci internet",
        "échanger sama poñ yi naka la",
        "naka lañuy échanger poñ yi",
        "bëgg naa weccee sama poñ ak neexal",
        "lan laa mëna jot ak sama poñ yi",
        "jëfandikoo poñ yi ngir jënd internet",
        "naka laa mëna jënd sms ak poñ yi",
        "bëgg naa soppi sama poñ yi crédit",
        "soppi poñ yi def ko crédit naka la",
        "mën naa jëfandikoo sama poñ ngir woote",
        "naka lañuy jëfandikoo poñ sargal",
        "weccil ma sama poñ yi",
        "bëgg naa jot neexal ak sama poñ",
        "jënd ak poñ yi lan la ñu ci mëna am",
    ],
    "sargal_info": [
        "lan mooy sargal",
        "sargal lan la",
        "wax ma lan mooy sargal",
        "wax ma lu jëm ci sargal",
        "xamal ma lan mooy prograamu sargal",
        "lan mooy prograamu sargal bi",
        "naka la sargal di doxe",
        "sargal naka lay doxe",
        "bëgg naa xam lu jëm ci sargal",
        "leeral ma prograamu sargal bi",
        "c'est quoi sargal",
        "sargal lu muy jariñ",
        "lu sargal di jariñ",
        "naka lañuy bokk ci sargal",
        "bëgg naa bokk ci sargal naka la",
        "ndax sargal dafa am njëg",
        "ndax bokk ci sargal dafay fay",
        "kan mooy mëna bokk ci sargal",
        "yan avantages la sargal di joxe",
        "wax ma avantages yi ci sargal",
        "xamal ma li sargal di",
    ],
    "contact_agent": [
        "bëgg naa wax ak téléconseiller",
        "jokkoo ak téléconseiller naka la",
        "bëgg naa jokkoo ak benn téléconseiller",
        "bëgg naa wax ak kenn ci yéen",
        "mën naa wax ak conseiller",
        "woo ma benn téléconseiller",
        "bëgg naa wax ak service client",
        "service client bi naka laa koy jotee",
        "jokkale ma ak service client",
        "bëgg naa wax ak nit te du robot",
        "dama bëgg wax ak nit",
        "am na problème bëgg naa wax ak téléconseiller",
        "sama problème dafa jafe jokkale ma ak kenn",
        "naka laa mëna jokkoo ak agent",
        "bëgg naa benn agent bu ma dimbali",
        "kenn mën na ma dimbali ci téléphone",
        "jotal ma ak benn conseiller",
        "bëgg naa woo service client",
        "numéro service client bi lan la",
        "jokkoo ak kenn ku mëna wax wolof",
    ],
}

REGEXES = [{"name": "ussd", "pattern": "#[0-9*]+#"}]


def main() -> None:
    total = sum(len(v) for v in INTENTS.values())
    assert total == 184, f"expected 184 examples, got {total}"
    assert len(INTENTS) == 9, f"expected 9 intents, got {len(INTENTS)}"
    for name, examples in INTENTS.items():
        assert len(examples) == len(set(examples)), f"duplicate examples under {name}"

    payload = {
        "comment": "Synthetic Sargal-domain dataset (hand-written, NOT field data): "
        "9 intent classes, 184 utterances, Wolof with French code-switching.",
        "intents": [{"name": name, "examples": examples} for name, examples in INTENTS.items()],
        "regexes": REGEXES,
    }
    out = Path(__file__).resolve().parents[1] / "src" / "wolofbot" / "data" / "sargal_nlu.json"
    out.write_text(json.dumps(payload, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out} ({total} examples, {len(INTENTS)} intents)")


if __name__ == "__main__":
    main()
