/*
 *  Copyright (C) 2026  fground authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */
#include "fground/plain_program.hpp"

#include <algorithm>

namespace fground {

namespace {

template <typename T>
void tidy(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

PlainRule canonical(PlainRule r) {
    tidy(r.head);
    tidy(r.pos);
    tidy(r.neg);
    for (auto& a : r.aggregates) {
        for (auto& e : a.elements) {
            for (auto& conj : e) tidy(conj);
            tidy(e);
        }
        tidy(a.elements);
    }
    tidy(r.aggregates);
    return r;
}

std::string to_string(const PlainRule& r) {
    std::string s;
    for (std::size_t i = 0; i < r.head.size(); ++i) s += (i ? " v " : "") + r.head[i];
    std::vector<std::string> body = r.pos;
    for (const auto& n : r.neg) body.push_back("not " + n);
    for (const auto& a : r.aggregates) {
        std::string e = "#count{";
        for (std::size_t i = 0; i < a.elements.size(); ++i) {
            if (i) e += "; ";
            for (std::size_t k = 0; k < a.elements[i].size(); ++k) {
                if (k) e += " | ";
                for (std::size_t j = 0; j < a.elements[i][k].size(); ++j) e += (j ? ", " : "") + a.elements[i][k][j];
            }
        }
        body.push_back(e + "} = " + std::to_string(a.target));
    }
    if (!body.empty() || r.head.empty()) s += r.head.empty() ? ":-" : " :-";
    for (std::size_t i = 0; i < body.size(); ++i) s += (i ? ", " : " ") + body[i];
    return s + ".";
}

} // namespace fground
