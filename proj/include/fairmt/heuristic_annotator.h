// Copyright 2026 The fairmt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRMT_HEURISTIC_ANNOTATOR_H_
#define FAIRMT_HEURISTIC_ANNOTATOR_H_

#include "fairmt/annotation.h"
#include "fairmt/corpus.h"
#include "fairmt/resources.h"

namespace fairmt {

// Rule-based stand-in for a real NLP stack, good enough for fixtures and
// desk-scale runs. It is much weaker than a neural pipeline.
//
//  - Tokens: split on whitespace and punctuation; clitics ('s, n't, 're,
//    'll, 've, 'd, 'm) become separate tokens.
//  - POS: closed-class word lists, gazetteer hits, suffix and capitalization
//    rules.
//  - Entities: Person = known first name plus following capitalized tokens;
//    Occupation = occupation gazetteer hit.
//  - Coreference: each gender pronoun joins the nearest preceding compatible
//    Person entity, gender-noun phrase, or already linked pronoun, never
//    reaching back further than the previous sentence.
//  - Dependencies: det / amod / compound edges inside noun phrases only.
//
// The result is bound to `doc`. Deterministic.
Annotation HeuristicAnnotate(const Document& doc, const ResourceBundle& res);

}  // namespace fairmt

#endif  // FAIRMT_HEURISTIC_ANNOTATOR_H_
