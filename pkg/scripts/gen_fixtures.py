#!/usr/bin/env python3
"""Regenerate the committed test fixtures under tests/fixtures/.

Everything here is deterministic; run it only when a fixture needs to
change, and commit the result.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def sha(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def dump(name: str, payload: dict) -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    path = FIXTURES / name
    path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {path}")


# --- SaaS BOM: seven services -------------------------------------------

SAAS_SERVICES = [
    ("api-gateway", "1.4.2"),
    ("auth-service", "2.1.0"),
    ("user-service", "1.9.3"),
    ("order-service", "3.0.1"),
    ("catalog-service", "1.2.8"),
    ("payment-service", "2.5.4"),
    ("user-datastore", "5.7.0"),
]

SAAS_DEPS = {
    "api-gateway": ["auth-service", "user-service", "order-service", "catalog-service"],
    "auth-service": ["user-datastore"],
    "user-service": ["user-datastore"],
    "order-service": ["payment-service"],
}


def gen_saas() -> None:
    ref = {name: f"urn:svc:{name}" for name, _ in SAAS_SERVICES}
    bom = {
        "bomFormat": "CycloneDX",
        "specVersion": "1.4",
        "version": 1,
        "components": [
            {
                "bom-ref": ref[name],
                "type": "application",
                "name": name,
                "version": version,
            }
            for name, version in SAAS_SERVICES
        ],
        "dependencies": [
            {"ref": ref[source], "dependsOn": [ref[target] for target in targets]}
            for source, targets in SAAS_DEPS.items()
        ],
    }
    dump("saas_bom.json", bom)


# --- proton-bridge style SBOM pair ---------------------------------------
#
# Shared backbone of unchanged Go modules (identical purl + hash on both
# sides), a set of version-bumped modules (same name, new version, new
# hash), plus a few modules present on only one side. The unchanged
# modules form a connected web so an exact hash match can anchor its way
# through the whole shared structure.

UNCHANGED = [
    "github.com/sirupsen/logrus",
    "github.com/pkg/errors",
    "github.com/stretchr/testify",
    "github.com/davecgh/go-spew",
    "github.com/pmezard/go-difflib",
    "golang.org/x/crypto",
    "golang.org/x/sys",
    "golang.org/x/text",
    "golang.org/x/net",
    "github.com/emersion/go-imap",
    "github.com/emersion/go-smtp",
    "github.com/emersion/go-sasl",
    "github.com/emersion/go-message",
    "github.com/emersion/go-textwrapper",
    "github.com/google/uuid",
    "github.com/gorilla/mux",
    "github.com/gorilla/handlers",
    "github.com/felixge/httpsnoop",
    "github.com/mattn/go-colorable",
    "github.com/mattn/go-isatty",
    "github.com/spf13/cobra",
    "github.com/spf13/pflag",
    "github.com/spf13/viper",
    "github.com/fsnotify/fsnotify",
    "github.com/hashicorp/hcl",
    "github.com/magiconair/properties",
    "github.com/mitchellh/mapstructure",
    "github.com/pelletier/go-toml",
    "github.com/subosito/gotenv",
    "gopkg.in/ini.v1",
    "gopkg.in/yaml.v2",
    "github.com/abiosoft/ishell",
    "github.com/abiosoft/readline",
    "github.com/fatih/color",
    "github.com/flynn-archive/go-shlex",
    "github.com/chzyer/logex",
    "github.com/nsf/termbox-go",
    "github.com/jaytaylor/html2text",
    "github.com/olekukonko/tablewriter",
    "github.com/ssor/bom",
    "golang.org/x/term",
    "github.com/andybalholm/cascadia",
    "github.com/PuerkitoBio/goquery",
    "github.com/kr/pretty",
    "github.com/kr/text",
    "github.com/cucumber/godog",
    "github.com/gofrs/uuid",
    "github.com/hashicorp/go-memdb",
    "github.com/hashicorp/golang-lru",
    "github.com/miekg/dns",
]

# name -> (old version, new version); hash changes with the version
CHANGED = {
    "github.com/ProtonMail/go-rfc5322": ("v0.5.0", "v0.8.0"),
    "github.com/ProtonMail/go-crypto": ("v0.0.0-20210428", "v0.0.0-20220113"),
    "github.com/ProtonMail/go-imap-id": ("v0.0.0-20190926", "v0.0.0-20210812"),
    "github.com/ProtonMail/go-autostart": ("v0.0.0-20181114", "v0.0.0-20210130"),
    "github.com/ProtonMail/go-vcard": ("v0.0.0-20180326", "v0.0.0-20210511"),
    "github.com/allan-simon/go-singleinstance": ("v0.0.0-20160830", "v0.0.0-20210120"),
    "github.com/docker/docker-credential-helpers": ("v0.6.3", "v0.6.4"),
    "github.com/getsentry/sentry-go": ("v0.10.0", "v0.12.0"),
    "github.com/keybase/go-keychain": ("v0.0.0-20200502", "v0.0.0-20201121"),
}

ONLY_OLD = [
    "github.com/jameskeane/bcrypt",
    "github.com/mitchellh/go-homedir",
    "github.com/skratchdot/open-golang",
    "github.com/therecipe/qt",
    "github.com/kardianos/osext",
    "github.com/myesui/uuid",
]

ONLY_NEW = [
    "github.com/bradenaw/juniper",
    "github.com/emersion/go-mbox",
    "github.com/ricochet2200/go-disk-usage",
    "github.com/vmihailenco/msgpack",
    "golang.org/x/exp",
]

# Edges are expressed on module names; each side resolves them to its own
# purls. The unchanged backbone is a chain with cross-links plus direct
# root dependencies, so it stays connected without the root or any
# changed module.
def proton_edges() -> list[tuple[str, str]]:
    edges: list[tuple[str, str]] = []
    root = "proton-bridge"
    # root depends on a spread of modules
    for name in UNCHANGED[:8] + list(CHANGED)[:4] + [UNCHANGED[20], UNCHANGED[30]]:
        edges.append((root, name))
    # unchanged chain + every 5th cross-link back to a hub
    for left, right in zip(UNCHANGED, UNCHANGED[1:]):
        edges.append((left, right))
    for index in range(0, len(UNCHANGED), 5):
        if index > 0:
            edges.append((UNCHANGED[0], UNCHANGED[index]))
    # changed modules hang off unchanged anchors
    for offset, name in enumerate(CHANGED):
        edges.append((UNCHANGED[(offset * 5 + 2) % len(UNCHANGED)], name))
    # one-sided modules hang off unchanged anchors
    for offset, name in enumerate(ONLY_OLD):
        edges.append((UNCHANGED[(offset * 7 + 3) % len(UNCHANGED)], name))
    for offset, name in enumerate(ONLY_NEW):
        edges.append((UNCHANGED[(offset * 6 + 4) % len(UNCHANGED)], name))
    return edges


def gen_proton() -> None:
    for filename, bridge_version, changed_index, extra in (
        ("proton_bridge_v1.6.3.json", "v1.6.3", 0, ONLY_OLD),
        ("proton_bridge_v1.8.0.json", "v1.8.0", 1, ONLY_NEW),
    ):
        versions: dict[str, str] = {"proton-bridge": bridge_version}
        for name in UNCHANGED:
            versions[name] = "v1.0.0"
        for name, pair in CHANGED.items():
            versions[name] = pair[changed_index]
        for name in extra:
            versions[name] = "v0.3.0"

        def purl(name: str) -> str:
            return f"pkg:golang/{name}@{versions[name]}"

        side_names = ["proton-bridge", *UNCHANGED, *CHANGED, *extra]
        components = []
        for name in side_names:
            if name == "proton-bridge":
                continue
            components.append(
                {
                    "bom-ref": purl(name),
                    "type": "library",
                    "name": name,
                    "version": versions[name],
                    "purl": purl(name),
                    "hashes": [{"alg": "SHA-256", "content": sha(purl(name))}],
                }
            )
        root_component = {
            "bom-ref": purl("proton-bridge"),
            "type": "application",
            "name": "proton-bridge",
            "version": bridge_version,
            "purl": purl("proton-bridge"),
            "hashes": [{"alg": "SHA-256", "content": sha(purl("proton-bridge"))}],
        }
        deps: dict[str, list[str]] = {}
        present = set(side_names)
        for source, target in proton_edges():
            if source in present and target in present:
                deps.setdefault(source, []).append(target)
        bom = {
            "bomFormat": "CycloneDX",
            "specVersion": "1.4",
            "version": 1,
            "metadata": {"component": root_component},
            "components": components,
            "dependencies": [
                {"ref": purl(source), "dependsOn": [purl(target) for target in targets]}
                for source, targets in deps.items()
            ],
        }
        dump(filename, bom)


# --- hardware BOM pair (node-link format, 30 nodes each) ------------------

HBOM_SHARED = [
    ("chassis", "Chassis C-900", "enclosure", "Acme Industrial"),
    ("mainboard", "Mainboard MB-77", "board", "Acme Industrial"),
    ("psu", "PSU-450", "power", "VoltWorks"),
    ("backplane", "Backplane BP-4", "board", "Acme Industrial"),
    ("fan", "Fan FN-92", "cooling", "VoltWorks"),
    ("led-panel", "LED Panel LP-6", "display", "Lumex"),
    ("lcd", "LCD Display LD-24", "display", "Lumex"),
    ("antenna", "Antenna AN-2", "rf", "WaveLink"),
    ("cpu", "CPU K2-6400", "ic", "KromTech"),
    ("ram0", "DIMM-8G 2400", "memory", "MemCore"),
    ("ram1", "DIMM-8G 2400", "memory", "MemCore"),
    ("io-board", "IO Board IOB-3", "board", "Acme Industrial"),
    ("flash", "NOR Flash NF-256", "memory", "MemCore"),
    ("eeprom", "EEPROM EE-64", "memory", "MemCore"),
    ("osc", "Oscillator OSC-25M", "ic", "KromTech"),
    ("vreg", "Voltage Regulator VR-3", "power", "VoltWorks"),
    ("cap-bank0", "Capacitor Bank CB-1", "passive", "Pasco"),
    ("cap-bank1", "Capacitor Bank CB-2", "passive", "Pasco"),
    ("res-net0", "Resistor Network RN-8", "passive", "Pasco"),
    ("res-net1", "Resistor Network RN-9", "passive", "Pasco"),
    ("tempsensor", "Temp Sensor TS-11", "sensor", "Sensia"),
    ("eth0", "Ethernet Port EP-1G", "port", "WaveLink"),
    ("eth1", "Ethernet Port EP-1G-B", "port", "WaveLink"),
    ("serial", "Serial Port SP-232", "port", "WaveLink"),
    ("usb", "USB Port UP-3", "port", "WaveLink"),
    ("fuse", "Fuse F-5A", "power", "VoltWorks"),
    ("relay0", "Relay RL-12", "power", "VoltWorks"),
    ("relay1", "Relay RL-24", "power", "VoltWorks"),
]

HBOM_EDGES = [
    ("chassis", "mainboard"),
    ("chassis", "psu"),
    ("chassis", "backplane"),
    ("chassis", "fan"),
    ("chassis", "led-panel"),
    ("chassis", "lcd"),
    ("chassis", "antenna"),
    ("mainboard", "cpu"),
    ("mainboard", "ram0"),
    ("mainboard", "ram1"),
    ("mainboard", "io-board"),
    ("mainboard", "flash"),
    ("mainboard", "eeprom"),
    ("mainboard", "osc"),
    ("mainboard", "vreg"),
    ("mainboard", "cap-bank0"),
    ("mainboard", "cap-bank1"),
    ("mainboard", "res-net0"),
    ("mainboard", "res-net1"),
    ("mainboard", "tempsensor"),
    ("io-board", "eth0"),
    ("io-board", "eth1"),
    ("io-board", "serial"),
    ("io-board", "usb"),
    ("io-board", "u7"),
    ("psu", "fuse"),
    ("psu", "relay0"),
    ("psu", "relay1"),
]


def gen_hbom() -> None:
    for filename, label, ic_name, extra_node, extra_edge in (
        (
            "hbom_device1.json",
            "device-7d0",
            "AS298",
            ("jtag", "JTAG Header JH-10", "port", "Acme Industrial"),
            ("mainboard", "jtag"),
        ),
        (
            "hbom_device2.json",
            "device-446",
            "A5298",
            ("db-board", "Daughterboard DB-2", "board", "Acme Industrial"),
            ("chassis", "db-board"),
        ),
    ):
        rows = [*HBOM_SHARED, ("u7", ic_name, "ic", "KromTech"), extra_node]
        nodes = [
            {"id": node_id, "attrs": {"name": name, "type": kind, "vendor": vendor}}
            for node_id, name, kind, vendor in rows
        ]
        edges = [[source, target] for source, target in [*HBOM_EDGES, extra_edge]]
        dump(filename, {"label": label, "nodes": nodes, "edges": edges})


# --- small golden pair: exact pass, fuzzy pass, collapse ------------------


def gen_golden() -> None:
    graph1 = {
        "label": "example-graph-1",
        "nodes": [
            {"id": "A", "attrs": {"name": "A"}},
            {"id": "B", "attrs": {"name": "B"}},
            {"id": "C", "attrs": {"name": "C"}},
            {"id": "D", "attrs": {"name": "DSP-4410"}},
            {"id": "E", "attrs": {"name": "E"}},
            {"id": "F", "attrs": {"name": "F"}},
            {"id": "G", "attrs": {"name": "G"}},
        ],
        "edges": [["C", "A"], ["C", "B"], ["C", "E"], ["E", "D"], ["D", "F"], ["D", "G"]],
    }
    graph2 = {
        "label": "example-graph-2",
        "nodes": [
            {"id": "A", "attrs": {"name": "A"}},
            {"id": "B", "attrs": {"name": "B"}},
            {"id": "C", "attrs": {"name": "C"}},
            {"id": "E", "attrs": {"name": "E"}},
            {"id": "H", "attrs": {"name": "DSP-4411"}},
        ],
        "edges": [["C", "A"], ["C", "B"], ["C", "E"], ["E", "H"]],
    }
    dump("golden_graph1.json", graph1)
    dump("golden_graph2.json", graph2)


if __name__ == "__main__":
    gen_saas()
    gen_proton()
    gen_hbom()
    gen_golden()
