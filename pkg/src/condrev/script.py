"""Line-oriented script interpreter driving the revision operators.

Grammar (commands separated by newlines or `;`):

    vars <id>+
    init flat | positive(<formula>) | classes [<model>, ... ; <model>, ... ; ...]
    nat|dow|unc|lex <conditional>
    show [json]
    diff-from-init
    entails <conditional>
    check <CRk> <op> <conditional>
    context <conditional>

A bare formula where a conditional is expected desugars to `true > formula`.
"""

import json

from .analysis import check_postulate, diff
from .logic import Alphabet, LogicError, parse_conditional, parse_formula
from .preorder import OrderError, flat, normalize, order_to_json, positive, satisfies
from .revision import OPERATOR_KINDS, RevisionError, contingent_context, revise

POSTULATE_IDS = tuple(f"CR{i}" for i in range(8))


class ScriptError(Exception):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.message = message


def _split_commands(source):
    """Yield (lineno, command) pairs; `;` separates commands except inside []."""
    for lineno, line in enumerate(source.splitlines(), start=1):
        depth = 0
        part = []
        for ch in line:
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth = max(0, depth - 1)
            if ch == ";" and depth == 0:
                yield lineno, "".join(part).strip()
                part = []
            else:
                part.append(ch)
        yield lineno, "".join(part).strip()


def _parse_classes(body, alphabet, lineno):
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ScriptError(lineno, "classes expects [...] with ;-separated classes")
    raw = []
    for chunk in body[1:-1].split(";"):
        mask = 0
        for model in chunk.split(","):
            if model.strip():
                mask |= 1 << alphabet.parse_model(model)
        raw.append(mask)
    return normalize(alphabet, raw)


class _Session:
    """Executes commands against a current-order register."""

    def __init__(self):
        self.alphabet = None
        self.initial = None
        self.current = None
        self.emits = []
        self.commands_after_init = 0

    def emit(self, payload):
        self.emits.append(payload)

    def require_order(self, lineno):
        if self.current is None:
            raise ScriptError(lineno, "no order yet: use `vars` then `init` first")

    def execute(self, lineno, command):
        head, _, rest = command.partition(" ")
        rest = rest.strip()
        if head == "vars":
            if self.alphabet is not None:
                raise ScriptError(lineno, "vars may only appear once")
            names = rest.split()
            if not names:
                raise ScriptError(lineno, "vars needs at least one variable")
            self.alphabet = Alphabet(tuple(names))
            return
        if self.alphabet is None:
            raise ScriptError(lineno, "script must start with a vars declaration")
        if head == "init":
            self.initial = self._parse_init(rest, lineno)
            self.current = self.initial
            return
        self.require_order(lineno)
        self.commands_after_init += 1
        if head in OPERATOR_KINDS:
            cond = parse_conditional(rest, self.alphabet)
            self.current = revise(self.current, head, cond)
        elif head == "show":
            if rest not in ("", "json"):
                raise ScriptError(lineno, f"show takes no argument or `json`: {rest!r}")
            self.emit({"command": "show", "json": rest == "json",
                       "order": order_to_json(self.current)})
        elif head == "diff-from-init":
            if rest:
                raise ScriptError(lineno, "diff-from-init takes no argument")
            pairs = sorted(diff(self.current, self.initial))
            names = [
                [self.alphabet.model_name(i), self.alphabet.model_name(j)]
                for i, j in pairs
            ]
            self.emit({"command": "diff-from-init", "pairs": names})
        elif head == "entails":
            cond = parse_conditional(rest, self.alphabet)
            self.emit({"command": "entails", "conditional": str(cond),
                       "holds": satisfies(self.current, cond)})
        elif head == "check":
            parts = rest.split(None, 2)
            if len(parts) != 3 or parts[0] not in POSTULATE_IDS:
                raise ScriptError(
                    lineno, "check expects: check <CR0..CR7> <op> <conditional>"
                )
            pid, kind, cond_text = parts
            if kind not in OPERATOR_KINDS:
                raise ScriptError(lineno, f"unknown operator: {kind}")
            cond = parse_conditional(cond_text, self.alphabet)
            verdict = check_postulate(kind, self.current, cond, pid)
            self.emit({"command": "check", **verdict.to_json()})
        elif head == "context":
            cond = parse_conditional(rest, self.alphabet)
            ctx = contingent_context(self.current, cond)
            self.emit({"command": "context", "conditional": str(cond),
                       "context": str(ctx)})
        else:
            raise ScriptError(lineno, f"unknown command: {head}")

    def _parse_init(self, rest, lineno):
        if rest == "flat":
            return flat(self.alphabet)
        if rest.startswith("positive(") and rest.endswith(")"):
            return positive(self.alphabet, parse_formula(rest[9:-1], self.alphabet))
        if rest.startswith("classes"):
            return _parse_classes(rest[len("classes"):], self.alphabet, lineno)
        raise ScriptError(
            lineno, "init expects flat, positive(<formula>), or classes [...]"
        )


def run_script(source, json_mode=False):
    """Execute a script and return the report as a string."""
    session = _Session()
    for lineno, command in _split_commands(source):
        if not command or command.startswith("#"):
            continue
        try:
            session.execute(lineno, command)
        except ScriptError:
            raise
        except (LogicError, OrderError, RevisionError) as exc:
            raise ScriptError(lineno, str(exc)) from exc
    if session.current is not None and session.commands_after_init == 0:
        session.emit({"command": "show", "json": False,
                      "order": order_to_json(session.current)})
    if json_mode:
        return json.dumps({"outputs": session.emits}, indent=2)
    return "\n".join(_render_text(session, e) for e in session.emits)


def _render_text(session, e):
    cmd = e["command"]
    if cmd == "show":
        if e["json"]:
            return json.dumps(e["order"])
        return _order_text(e["order"])
    if cmd == "diff-from-init":
        if not e["pairs"]:
            return "diff-from-init: (none)"
        lines = [f"({a}, {b})" for a, b in e["pairs"]]
        return "diff-from-init:\n" + "\n".join(lines)
    if cmd == "entails":
        return f"entails {e['conditional']}: {'true' if e['holds'] else 'false'}"
    if cmd == "check":
        status = "holds" if e["holds"] else "fails"
        line = f"check {e['postulate']} {e['operator']}: {status}"
        if not e["holds"] and e.get("witness"):
            line += "\n  witness: " + json.dumps(e["witness"], sort_keys=True)
        return line
    if cmd == "context":
        return f"context {e['conditional']}: {e['context']}"
    raise AssertionError(cmd)


def _order_text(order_json):
    return "\n".join(" ".join(names) for names in order_json["classes"])
