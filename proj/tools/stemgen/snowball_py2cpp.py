#!/usr/bin/env python3
"""Translate a Snowball-generated Python stemmer into a C++ class.

The Python target of the Snowball compiler emits a small, regular subset of
Python (try/except-label control flow, while True loops, cursor arithmetic).
This script maps that subset onto the C++ runtime in src/stem/snowball_runtime.hpp.

Usage: snowball_py2cpp.py <language> > src/stem/<language>_stemmer.cpp
"""

import os
import re
import sys

import snowballstemmer


class Node:
    def __init__(self, text, indent):
        self.text = text
        self.indent = indent
        self.children = []


def parse_tree(lines):
    root = Node("", -1)
    stack = [root]
    for raw in lines:
        if not raw.strip():
            continue
        indent = len(raw) - len(raw.lstrip(" "))
        node = Node(raw.strip(), indent)
        while stack[-1].indent >= indent:
            stack.pop()
        stack[-1].children.append(node)
        stack.append(node)
    return root


def cpp_string(s):
    return 'U"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def cpp_char(c):
    return "\\" + c if c in ("'", "\\") else c


def translate_expr(expr, cls):
    expr = expr.replace(cls + ".", "")
    expr = expr.replace("self.__r_", "r_")
    expr = expr.replace("self.", "")
    # single-character comparisons against the current buffer
    expr = re.sub(r'(current\[[^\]]+\]) (!=|==) "(.)"', lambda m: f"{m.group(1)} {m.group(2)} U'{cpp_char(m.group(3))}'", expr)
    expr = re.sub(r'"((?:[^"\\]|\\.)*)"', lambda m: cpp_string(m.group(1)), expr)
    expr = re.sub(r"\bnot\b ", "!", expr)
    expr = re.sub(r"\bor\b", "||", expr)
    expr = re.sub(r"\band\b", "&&", expr)
    expr = re.sub(r"\bTrue\b", "true", expr)
    expr = re.sub(r"\bFalse\b", "false", expr)
    return expr


class Emitter:
    def __init__(self, cls):
        self.cls = cls
        self.out = []
        self.label_counter = 0

    def emit(self, depth, text):
        self.out.append("    " * depth + text)

    def block(self, nodes, depth, labels):
        i = 0
        while i < len(nodes):
            node = nodes[i]
            t = node.text
            if t == "try:":
                nxt = nodes[i + 1]
                m = re.fullmatch(r"except (lab\d+): pass", nxt.text)
                if not m:
                    raise SystemExit(f"unexpected handler: {nxt.text}")
                self.label_counter += 1
                target = f"{m.group(1)}_{self.label_counter}"
                self.emit(depth, "{")
                self.block(node.children, depth + 1, labels + [(m.group(1), target)])
                self.emit(depth, "}")
                self.emit(depth, f"{target}:;")
                i += 2
                continue
            if t == "while True:":
                self.emit(depth, "while (true) {")
                self.block(node.children, depth + 1, labels)
                self.emit(depth, "}")
            elif t.startswith("if ") and t.endswith(":"):
                self.emit(depth, f"if ({translate_expr(t[3:-1], self.cls)}) {{")
                self.block(node.children, depth + 1, labels)
                self.emit(depth, "}")
            elif t.startswith("elif ") and t.endswith(":"):
                self.emit(depth, f"else if ({translate_expr(t[5:-1], self.cls)}) {{")
                self.block(node.children, depth + 1, labels)
                self.emit(depth, "}")
            elif t == "else:":
                self.emit(depth, "else {")
                self.block(node.children, depth + 1, labels)
                self.emit(depth, "}")
            elif m := re.fullmatch(r"raise (lab\d+)\(\)", t):
                name = m.group(1)
                for lab, target in reversed(labels):
                    if lab == name:
                        self.emit(depth, f"goto {target};")
                        break
                else:
                    raise SystemExit(f"unbound label {name}")
            elif t in ("break", "continue"):
                self.emit(depth, t + ";")
            elif t == "pass":
                pass
            elif t.startswith("return"):
                self.emit(depth, translate_expr(t, self.cls) + ";")
            elif t.startswith("assert"):
                pass
            else:
                if node.children:
                    raise SystemExit(f"unhandled block: {t}")
                self.emit(depth, translate_expr(t, self.cls) + ";")
            i += 1


def main():
    lang = sys.argv[1]
    base = os.path.dirname(snowballstemmer.__file__)
    with open(os.path.join(base, f"{lang}_stemmer.py"), encoding="utf-8") as fh:
        lines = fh.read().split("\n")
    root = parse_tree(lines)
    cls_node = next(n for n in root.children if n.text.startswith("class ") and "BaseStemmer" in n.text)
    cls = re.match(r"class (\w+)", cls_node.text).group(1)

    groupings, flags, ints, tables, string_tables, methods = [], [], [], [], [], []
    children = [c for c in cls_node.children if not c.text.startswith("'''")]
    skip_doc = False
    for c in cls_node.children:
        t = c.text
        if t.startswith("'''"):
            skip_doc = not skip_doc if t.count("'''") == 1 else skip_doc
            continue
        if skip_doc:
            if t.endswith("'''"):
                skip_doc = False
            continue
        if m := re.fullmatch(r"(g_\w+) = (.*)", t):
            val = m.group(2)
            if val.startswith("{"):
                chars = re.findall(r'"(.)"', val)
            else:
                chars = list(val.strip('"'))
            groupings.append((m.group(1), "".join(chars)))
        elif m := re.fullmatch(r"(B_\w+) = (True|False)", t):
            flags.append((m.group(1), m.group(2) == "True"))
        elif m := re.fullmatch(r"(I_\w+) = (-?\d+)", t):
            ints.append((m.group(1), int(m.group(2))))
        elif m := re.fullmatch(r"(a_\d+) = \[", t):
            entries = []
            for e in c.children:
                em = re.fullmatch(r'Among\("((?:[^"\\]|\\.)*)", (-?\d+), (-?\d+)\),?', e.text)
                if not em:
                    raise SystemExit(f"bad among: {e.text}")
                entries.append((em.group(1), int(em.group(2)), int(em.group(3))))
            tables.append((m.group(1), entries))
        elif m := re.fullmatch(r"(as_\d+) = \((.*)\)", t):
            string_tables.append((m.group(1), re.findall(r'"((?:[^"\\]|\\.)*)"', m.group(2))))
        elif m := re.fullmatch(r"def (\w+)\(self\):", t):
            methods.append((m.group(1).replace("__r_", "r_"), c))
        elif t == "]":
            continue
        else:
            raise SystemExit(f"unhandled class member: {t}")

    ns_cls = lang.capitalize() + "Stemmer"
    o = []
    o.append(f"// Generated by tools/stemgen/snowball_py2cpp.py from the Snowball {lang} algorithm.")
    o.append("// Snowball is (c) Dr Martin Porter and Richard Boulton, BSD-licensed (https://snowballstem.org/).")
    o.append("// Do not edit by hand; regenerate instead.")
    o.append("")
    o.append('#include "stem/snowball_runtime.hpp"')
    o.append('#include "stem/stemmers.hpp"')
    o.append("")
    o.append('#pragma GCC diagnostic ignored "-Wunused-label"')
    o.append("")
    o.append("namespace bicross::stem {")
    o.append("namespace {")
    o.append("")
    for name, chars in groupings:
        o.append(f"const std::u32string_view {name} = {cpp_string(chars)};")
    o.append("")
    for name, entries in tables:
        o.append(f"const Among {name}[] = {{")
        for s, sub, res in entries:
            o.append(f"    {{{cpp_string(s)}, {sub}, {res}}},")
        o.append("};")
        o.append("")
    for name, strings in string_tables:
        o.append(f"const std::u32string_view {name}[] = {{{', '.join(cpp_string(s) for s in strings)}}};")
        o.append("")
    o.append(f"class {ns_cls} final : public SnowballBase {{")
    o.append("public:")
    o.append("    std::u32string run(std::u32string word) {")
    o.append("        set_current(std::move(word));")
    o.append("        stem();")
    o.append("        return current;")
    o.append("    }")
    o.append("")
    o.append("private:")
    for name, val in flags:
        o.append(f"    bool {name} = {'true' if val else 'false'};")
    for name, val in ints:
        o.append(f"    int {name} = {val};")
    o.append("")
    for name, node in methods:
        em = Emitter(cls)
        body_text = "\n".join(collect_text(node))
        locals_ = sorted(set(re.findall(r"\b(v_\d+|among_var)\b", body_text))
                         | set(re.findall(r"(?<![.\w])(I_\w+) = ", body_text)), key=natural_key)
        fname = "stem" if name == "_stem" else name
        em.emit(1, f"bool {fname}() {{")
        if locals_:
            em.emit(2, "int " + ", ".join(f"{v} = 0" for v in locals_) + ";")
            em.emit(2, "static_cast<void>(" + ");\n        static_cast<void>(".join(locals_) + ");")
        em.block(node.children, 2, [])
        em.emit(1, "}")
        o.extend(em.out)
        o.append("")
    o.append("};")
    o.append("")
    o.append("}  // namespace")
    o.append("")
    o.append(f"std::u32string stem_{lang}(std::u32string word) {{")
    o.append(f"    {ns_cls} stemmer;")
    o.append("    return stemmer.run(std::move(word));")
    o.append("}")
    o.append("")
    o.append("}  // namespace bicross::stem")
    sys.stdout.write("\n".join(o) + "\n")


def collect_text(node):
    out = [node.text]
    for c in node.children:
        out.extend(collect_text(c))
    return out


def natural_key(s):
    m = re.match(r"v_(\d+)", s)
    return (0, int(m.group(1))) if m else (1, 0)


if __name__ == "__main__":
    main()
