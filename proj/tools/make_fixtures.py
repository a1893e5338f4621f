#!/usr/bin/env python3
# Copyright 2026 The reqlint Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates fixtures/paper_examples.jsonl and fixtures/gold.jsonl.

Trees are hand-written. Tokens come from the preterminals; lemmas from the
table below (default: the lowercased word). Gold records what the linter is
expected to report, including known misreadings caused by bad tags.
"""

import argparse
import json
import pathlib
import re

LEMMAS = {
    "is": "be", "are": "be", "was": "be", "were": "be", "been": "be",
    "has": "have", "had": "have",
    "receives": "receive", "received": "receive", "creates": "create",
    "validated": "validate", "sent": "send", "clicks": "click",
    "confirms": "confirm", "wants": "want", "performs": "perform",
    "defines": "define", "opens": "open", "launches": "launch",
    "contains": "contain", "recorded": "record", "rejected": "reject",
    "creating": "create", "set": "set", "Status": "status",
    "depositories": "depository", "reports": "report", "systems": "system",
    "details": "detail", "portfolios": "portfolio", "parameters": "parameter",
    "rules": "rule", "instructions": "instruction", "media": "media",
    "fields": "field", "operations": "operation", "messages": "message",
    "data": "data", "Ordering": "order", "according": "accord",
    "following": "following", "'s": "'s",
}

E = []


def req(rid, tree, smells, pattern, marks=()):
    E.append((rid, tree, smells, pattern, list(marks)))


# Running example.
req("fig4-running",
    "(S (S (PP (IN Upon) (NP (NP (NN reception)) (PP (IN of) (NP (DT a) (NN settlement) (NN instruction)))"
    " (PP (IN from) (NP (NNP System-A))))) (, ,) (NP (NNP System-B)) (VP (MD must) (VP (VB process)"
    " (NP (DT the) (NN settlement) (NN instruction))))) (CC and) (S (NP (DT the) (NN input) (NN media) (NN field))"
    " (VP (MD must) (VP (VB be) (VP (VBN set) (PP (TO to) (NP (NNP SINF))))))))",
    ["incomplete_condition", "non_atomic", "passive_voice", "not_precise_verb"], "P7")

req("fig6-scope-condition",
    "(S (PP (IN For) (NP (DT all) (NNS depositories))) (, ,)"
    " (SBAR (WHADVP (WRB when)) (S (NP (NNP System-A)) (VP (VBZ receives)"
    " (NP (DT an) (NN email) (NN alert)) (PP (IN from) (NP (NNP System-B))))))"
    " (, ,) (NP (NNP System-A)) (VP (MD must) (VP (VB create)"
    " (NP (DT an) (NN MT530_transaction)))))",
    [], "P3")

# Segment patterns, one example each.
req("t4-SC1",
    "(S (PP (IN For) (NP (PDT all) (DT the) (NNS depositories))) (, ,) (NP (NNP System-A))"
    " (VP (MD must) (VP (VB create) (NP (DT a) (NNP T30) (NN transaction) (NN processing) (NN command))))"
    " (. .))",
    [], "P1")
req("t4-SC2",
    "(S (NP (NNP System-A)) (VP (MD must) (VP (VB create) (NP (DT an) (NN instruction))"
    " (PP (IN with) (NP (DT the) (DT the) (JJ remote) (NN code) (NN value) (NNP B))))"
    " (PP (IN for) (NP (DT each) (NN settlement) (NN request)))) (. .))",
    [], "P1")
req("t4-C1",
    "(S (SBAR (WHADVP (WRB When)) (S (S (NP (NNP System-A)) (VP (VBZ creates) (NP (NP (CD one))"
    " (PP (IN of) (NP (DT the) (JJ following) (NNS reports)))))) (: :) (NP (NP (NN list)) (, ,)"
    " (NP (NP (NN list)) (PP (IN with) (NP (NNP Beta))))))) (, ,) (NP (NNP System-A))"
    " (VP (MD must) (VP (VB populate) (NP (DT the) (NN field) (NNP A)) (PP (IN in) (NP (DT the) (NN report)))))"
    " (. .))",
    [], "P7")
req("t4-C2",
    "(S (SBAR (IN Once) (S (NP (NNP System-A)) (VP (VBZ has) (ADVP (RB successfully)) (VP (VBN validated)"
    " (NP (DT a) (NN settlement) (NN request)))))) (, ,) (NP (NNP System-A)) (VP (MD must) (VP (VB send)"
    " (NP (DT an) (NN acknowledge) (NN message)) (PP (TO to) (NP (NNP System-B))))) (. .))",
    [], "P7")
req("t4-C3",
    "(S (NP (NNP System-A)) (VP (MD must) (VP (VB send) (NP (DT a) (NN settlement) (NN request))"
    " (PP (TO to) (NP (NNP System-B))) (SBAR (WHADVP (WRB when)) (S (NP (DT the) (NN contract) (NN note))"
    " (VP (VBZ has) (VP (VBN been) (VP (VBN received) (PP (IN from) (NP (NNP System-C)))))))))) (. .))",
    ["incorrect_order", "passive_voice"], "P7")
req("t4-C4",
    "(S (WHADVP (WRB When)) (S (NP (NP (DT the) (NN fund) (NN frequency)) (PP (IN in) (NP (NN reference) (NNS data))))"
    " (VP (VBZ has) (NP (DT an) (JJ empty) (NN value)))) (, ,) (ADVP (RB then)) (NP (NNP System-A))"
    " (VP (MD must) (VP (VB set) (NP (DT the) (NN fund) (NN frequency)) (PP (TO to) (NP (NN daily))))) (. .))",
    [], "P6")
req("t4-C5",
    "(S (WHADVP (WRB When)) (NP (DT the) (NN user)) (VP (VBZ clicks) (PP (IN on) (NP (NP (DT the) (JJ left)"
    " (NN side) (NN menu)) (, ,) (NP (NN portfolio) (NN section))))) (, ,) (NP (NNP System-A))"
    " (VP (MD must) (VP (VB display) (NP (DT the) (NNS portfolios)))) (. .))",
    [], "P7")
req("t4-C6",
    "(S (SBAR (WHADVP (WRB When)) (S (NP (DT a) (NN user)) (VP (VBZ confirms) (SBAR (IN that) (S (NP (PRP he))"
    " (VP (VBZ wants) (S (VP (TO to) (VP (VB cancel) (NP (NP (DT the) (NN creation)) (PP (IN of)"
    " (NP (DT an) (NN account) (NN record))))))))))))) (, ,) (NP (DT the) (NNP System-A)) (VP (MD must)"
    " (VP (VB delete) (NP (NP (DT the) (JJ related) (NNS parameters)) (VP (VBN recorded) (PP (IN in)"
    " (NP (NP (NN account)) (PP (IN with) (NP (NN status) (NN draft))))))))) (. .))",
    ["not_precise_verb"], "P7")
req("t4-C7",
    "(S (SBAR (WHADVP (IN If)) (S (NP (DT the) (NN settlement) (NN date)) (VP (VBZ is) (ADJP (JJ present))"
    " (PP (IN in) (NP (NP (DT the) (NN instruction)) (VP (VBN sent) (PP (TO to) (NP (NNP System-A))))))))) "
    " (ADVP (RB then)) (NP (NNP System-A)) (VP (MD must) (VP (VB store) (PP (IN in) (NP (NN data) (NN storage)"
    " (NN unit))))) (. .))",
    [], "P7")
req("t4-C8",
    "(S (PP (IN Before) (NP (DT the) (NNP System-A) (NN cutover))) (, ,) (NP (NNP System-A)) (VP (MD must)"
    " (VP (VB update) (NP (DT the) (JJ entity-A) (NN data) (NN model)))) (. .))",
    [], "P8")
req("t4-SR1",
    "(S (NP (NNP System-A)) (VP (MD must) (VP (VB send) (NP (DT the) (NN fund) (NNS details) (NN report))"
    " (PP (TO to) (NP (JJ local) (NN team))) (ADVP (RB daily)))) (. .))",
    [], "P5")

# Incomplete conditions.
req("t7-EIC1",
    "(S (PP (IN Upon) (NP (NP (NN reception)) (PP (IN from) (NP (NNP System-A))) (NP (NP (DT the) (NN status)"
    " (NNP Pending)) (PP (IN of) (NP (DT an) (NNP Instruction)))))) (, ,) (ADVP (RB then)) (NP (NNP System-A))"
    " (VP (MD must) (VP (VB update) (NP (DT the) (NN instruction) (NN status)))) (. .))",
    ["incomplete_condition"], "P7")
req("t7-EIC2",
    "(S (SBAR (WHADVP (WRB When)) (S (VP (VBG creating) (NP (DT a) (JJ new) (NN participant))))) (, ,)"
    " (NP (NNP System-A)) (VP (MD must) (VP (VB assign) (NP (DT a) (JJ unique) (NN identifier))"
    " (PP (TO to) (NP (DT the) (NN participant))))) (. .))",
    ["incomplete_condition"], "P7")

# Smell catalog examples.
req("t3-non-atomic",
    "(S (NP (NNP System-A)) (VP (MD must) (VP (VP (VB add) (NP (NNP System-B)) (PP (TO to) (NP (PRP$ their)"
    " (JJ downstream) (NNS systems)))) (CC and) (VP (VB allow) (S (NP (NNP System-C)) (VP (TO to) (VP (VB subscribe)"
    " (PP (TO to) (NP (DT the) (NNP Reporting) (NN flow))))))))) (. .))",
    ["non_atomic"], "P5")
req("t3-incomplete-requirement",
    "(S (SBAR (SBAR (WHADVP (WRB When)) (S (NP (NNP System-A)) (VP (VBZ receives) (NP (NP (DT a) (NN message))"
    " (PP (IN from) (NP (NNP Security) (NNP Manager))))))) (CC and) (SBAR (WHADVP (IN if)) (S (NP (DT the)"
    " (NN message)) (VP (VBZ is) (NP (NP (NN part)) (PP (IN of) (NP (DT the) (NNP B-file)))))))) (, ,)"
    " (PP (VBG according) (PP (TO to) (NP (DT the) (NN mapping) (NNS rules)))) (. .))",
    ["incomplete_requirement"], "P10")
req("t3-incorrect-order",
    "(S (SBAR (WHADVP (WRB When)) (S (S (NP (DT the) (NN user)) (VP (VBZ is) (PP (IN on) (NP (DT the)"
    " (NNP Utilities) (NN page))))) (CC and) (S (NP (DT the) (NN user)) (VP (VBZ clicks) (PP (IN on) (NP (NP (DT the)"
    " (NN button)) (NP (NNP Display)) (PP (IN on) (NP (JJ main) (NN page))))))))) (, ,) (NP (NNP System-A))"
    " (VP (MD must) (VP (VB open) (NP (DT the) (NNP Alert) (NN section)) (SBAR (WHADVP (WRB when)) (S (NP (DT the)"
    " (NN user)) (VP (VBZ launches) (NP (NNP System-A))))))) (. .))",
    ["incorrect_order"], "P10")
req("t3-coordination-ambiguity",
    "(S (SBAR (SBAR (WHADVP (WRB When)) (S (NP (NNP System-A)) (VP (VBZ performs) (NP (NP (NN eligibility)"
    " (NN check)) (PP (IN for) (NP (DT a) (NN participant))))))) (CC or) (SBAR (WHADVP (IN if)) (S (NP (DT the)"
    " (NN holding) (NN type)) (VP (VBZ is) (ADJP (JJ complex))))) (CC or) (SBAR (WHADVP (IN if)) (S (S (NP (DT the)"
    " (NN holding) (NN type)) (VP (VBZ is) (ADJP (JJ simple)))) (CC and) (S (NP (DT the) (NN F-value))"
    " (VP (VBZ is) (NP (NNP Prime))))))) (, ,) (ADVP (RB then)) (NP (NNP System-B)) (VP (MD must) (VP (VB reject)"
    " (NP (DT the) (NN participant)))) (. .))",
    ["coordination_ambiguity", "not_precise_verb"], "P10")
req("t3-not-requirement",
    "(S (NP (DT The) (NNP R6) (NN instruction)) (VP (VBZ defines) (NP (DT the) (JJ original) (NN instruction))) (. .))",
    ["not_a_requirement"], None)
req("t3-incomplete-condition",
    "(S (PP (IN Upon) (NP (NP (NN receipt)) (PP (IN of) (NP (NP (DT a) (NN message)) (PP (IN in) (NP (DT the)"
    " (NN message) (NNP Queue))))))) (, ,) (NP (NNP System-A)) (VP (MD must) (VP (VB set) (NP (DT the) (NN state))"
    " (PP (TO to) (ADJP (JJ unprocessed))))) (. .))",
    ["incomplete_condition"], "P7")
req("t3-incomplete-system-response",
    "(S (SBAR (WHADVP (WRB When)) (S (NP (DT the) (NN user)) (VP (VBZ clicks) (PP (IN on) (NP (DT the)"
    " (NNP Filter) (NN button)))))) (, ,) (NP (NNP System-A)) (VP (VBZ opens) (NP (DT the) (NNP Filter) (NN screen)))"
    " (. .))",
    ["incomplete_system_response"], "P7")
req("t3-passive-voice",
    "(S (SBAR (WHADVP (WRB When)) (S (NP (DT a) (NN rejection) (NN order)) (VP (VBZ is) (VP (VBN received)"
    " (PP (IN for) (NP (DT a) (NN cancellation) (NN request))))))) (, ,) (NP (NNP System-A)) (VP (MD must)"
    " (VP (VB raise) (NP (DT a) (NN web) (NN alert)))) (. .))",
    ["passive_voice", "not_precise_verb"], "P7")
req("t3-not-precise-verb",
    "(S (NP (NNP System-A)) (VP (MD must) (VP (VB be) (ADJP (JJ able) (S (VP (TO to) (VP (VB process)"
    " (NP (NP (NNP System-B) (POS 's)) (NNS instructions)) (PP (IN with) (NP (NN input) (NNS media)"
    " (NNP INPUT))))))))) (. .))",
    ["not_precise_verb"], "P5")

# Rimay condition forms.
req("t1-if-precondition",
    "(S (SBAR (WHADVP (IN If)) (S (NP (DT an) (NNP Instruction)) (VP (VBZ contains) (NP (DT a) (NNP Keyword)))))"
    " (, ,) (NP (NNP System-A)) (VP (MD must) (VP (VB flag) (NP (DT the) (NNP Instruction)))) (. .))",
    [], "P6")

# Misreadings caused by parser or tagger errors. Gold holds what the
# linter reports, not what an analyst would annotate.
req("t12-R1",
    "(S (NP (DT The) (NNP System-A)) (VP (MD must) (VP (VB route) (NP (DT the) (JJ outbound) (NNS messages))"
    " (PP (TO to) (NP (NNP System-B))) (PP (RB instead) (IN of) (NP (NNP System-C))))) (. .))",
    [], "P5")
req("t12-R1-route-noun",
    "(S (NP (NP (DT The) (NNP System-A) (MD must) (NN route)) (NP (DT the) (JJ outbound) (NNS messages)))"
    " (PP (TO to) (NP (NNP System-B))) (PP (RB instead) (IN of) (NP (NNP System-C))) (. .))",
    ["not_a_requirement"], None)
req("t12-R2",
    "(S (PP (IN Upon) (NP (NP (NN receipt)) (PP (IN of) (NP (DT a) (JJ valid) (NN C01) (NN cancellation)))"
    " (PP (IN from) (NP (NNP System-A) (NNP Participant))))) (, ,) (ADVP (RB then)) (NP (DT the) (NNP System-B))"
    " (VP (MD must) (NP (NP (NN route)) (NP (DT the) (NN cancellation)) (PP (TO to) (NP (DT the) (JJ same)"
    " (NN destination))))) (. .))",
    ["incomplete_condition", "incomplete_system_response"], "P7")
req("t12-R3",
    "(SBAR (WHADVP (IN if)) (S (NP (DT the) (NNP System-A) (NNP Order) (NNP Issuer) (VBG Ordering) (NNS data))"
    " (VP (SYM =) (NP (NNP Value-A)))))",
    ["incomplete_requirement"], "P7")
req("t12-R4",
    "(S (SBAR (WHADVP (WRB When)) (S (NP (DT the) (NN user)) (VP (VBZ clicks) (PP (IN on) (NP (NP (DT the)"
    " (NNP Edit) (NN icon)) (PP (IN of) (NP (NNP Screen-1)))))))) (, ,) (NP (NNP System-A)) (VP (MD must)"
    " (VP (VB set) (PP (IN in) (NP (JJ updatable) (NN mode))) (NP (NP (DT the) (JJ following) (NNS fields)) (: :)"
    " (NP (NP (NN Include) (NN portfolio)) (PP (IN in) (NP (DT the) (NNP S-Order)))) (, ,) (NP (NP (NNP Alert))"
    " (PP (TO to) (NP (NNS operations))) (PRN (-LRB- -LRB-) (FW e.g.) (, ,) (SBAR (WHADVP (WRB when)) (S (NP (NNP Order))"
    " (VP (VBZ is) (VP (VBN rejected))))) (-RRB- -RRB-)))))))",
    ["incorrect_order", "passive_voice"], "P10",
    marks=[("bullet", "Include"), ("bullet", "Alert")])
req("t12-R5",
    "(S (SBAR (WHADVP (IN If)) (S (NP (DT the) (NNP Participant)) (VP (VBZ Status) (NP (SYM =) (NNP Delete)))))"
    " (, ,) (ADVP (RB then)) (NP (NNP System-A)) (VP (MD must) (VP (VB populate) (NP (DT the) (NN field) (NN Status))"
    " (PP (IN with) (NP (DT the) (NN value) (JJ inactive))))) (. .))",
    [], "P7")


def preterminals(tree):
    return re.findall(r"\(([^\s()]+) ([^\s()]+)\)", tree)


def lemma(word, pos):
    if word in LEMMAS:
        return LEMMAS[word]
    low = word.lower()
    if pos == "NNS" and low.endswith("s"):
        return low[:-1]
    return low


def surface(words):
    text = " ".join(words)
    text = text.replace("-LRB- ", "(").replace(" -RRB-", ")")
    return re.sub(r" ([,.:;]|'s)(?= |$)", r"\1", text)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parent.parent
                        / "fixtures")
    root = parser.parse_args().out_dir
    root.mkdir(parents=True, exist_ok=True)
    ids = set()
    with open(root / "paper_examples.jsonl", "w") as corpus, \
            open(root / "gold.jsonl", "w") as gold:
        for rid, tree, smells, pattern, marks in E:
            assert rid not in ids, rid
            ids.add(rid)
            tree = " ".join(tree.split())
            pairs = preterminals(tree)
            words = [w for _, w in pairs]
            tokens = [{"text": w, "lemma": lemma(w, p), "pos": p, "index": i}
                      for i, (p, w) in enumerate(pairs)]
            out_marks = [{"kind": k, "before_token": words.index(w)}
                         for k, w in marks]
            rec = {"id": rid, "text": surface(words), "tokens": tokens,
                   "tree": tree, "marks": out_marks}
            corpus.write(json.dumps(rec) + "\n")
            gold.write(json.dumps({"id": rid, "smells": sorted(smells),
                                   "pattern": pattern}) + "\n")


if __name__ == "__main__":
    main()
