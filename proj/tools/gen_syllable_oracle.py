#!/usr/bin/env python3
# Copyright 2026 The Text Friction Authors. All Rights Reserved.
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
"""Regenerates tests/data/syllable_oracle.tsv from the CMU Pronouncing Dictionary.

Each output row is: word<TAB>comma-separated syllable counts, one count per
distinct pronunciation (a syllable is a phone carrying a stress digit).

    pip install cmudict
    python3 tools/gen_syllable_oracle.py tests/data/syllable_words.txt > tests/data/syllable_oracle.tsv
"""
import sys

import cmudict

LIMIT = 200


def main() -> int:
    words = open(sys.argv[1], encoding="ascii").read().split()[:LIMIT]
    if len(words) != LIMIT:
        sys.exit(f"need {LIMIT} words, got {len(words)}")
    pron = cmudict.dict()
    for word in words:
        if word not in pron:
            sys.exit(f"{word}: not in CMU dictionary")
        counts = sorted({sum(ph[-1].isdigit() for ph in p) for p in pron[word]})
        print(f"{word}\t{','.join(map(str, counts))}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
