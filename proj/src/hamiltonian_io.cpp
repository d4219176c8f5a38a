// Copyright 2026 The hamvqe Authors.
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

#include "hamvqe/hamiltonian_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "hamvqe/error.hpp"

namespace hamvqe {
namespace {

using nlohmann::json;

// Forward iterator over the input that counts consumed characters, so SAX
// callbacks can learn where in the text the value they receive ended.
class CountingIterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char *;
    using reference = const char &;

    CountingIterator() = default;
    CountingIterator(const char *p, std::size_t *consumed) : p_(p), consumed_(consumed) {}

    reference operator*() const { return *p_; }
    CountingIterator &operator++() {
        ++p_;
        if (consumed_) {
            ++*consumed_;
        }
        return *this;
    }
    CountingIterator operator++(int) {
        auto old = *this;
        ++*this;
        return old;
    }
    bool operator==(const CountingIterator &o) const { return p_ == o.p_; }

  private:
    const char *p_ = nullptr;
    std::size_t *consumed_ = nullptr;
};

// Builds the DOM and remembers where each terms[j].pauli string sits.
class LocatingSax {
  public:
    LocatingSax(json &root, const std::size_t *consumed) : dom_(root), consumed_(consumed) {}

    std::vector<std::size_t> pauli_offsets;  // offset of the first character

    bool null() { return dom_.null(); }
    bool boolean(bool v) { return dom_.boolean(v); }
    bool number_integer(json::number_integer_t v) { return dom_.number_integer(v); }
    bool number_unsigned(json::number_unsigned_t v) { return dom_.number_unsigned(v); }
    bool number_float(json::number_float_t v, const std::string &s) {
        return dom_.number_float(v, s);
    }
    bool string(std::string &v) {
        if (depth_ == 3 && top_key_ == "terms" && key_ == "pauli") {
            // The closing quote has just been consumed.
            pauli_offsets.push_back(*consumed_ - v.size() - 1);
        }
        return dom_.string(v);
    }
    bool binary(json::binary_t &v) { return dom_.binary(v); }
    bool start_object(std::size_t n) {
        ++depth_;
        return dom_.start_object(n);
    }
    bool key(std::string &k) {
        if (depth_ == 1) {
            top_key_ = k;
        }
        key_ = k;
        return dom_.key(k);
    }
    bool end_object() {
        --depth_;
        return dom_.end_object();
    }
    bool start_array(std::size_t n) {
        ++depth_;
        return dom_.start_array(n);
    }
    bool end_array() {
        --depth_;
        return dom_.end_array();
    }
    template <class Exception>
    bool parse_error(std::size_t pos, const std::string &tok, const Exception &ex) {
        return dom_.parse_error(pos, tok, ex);
    }

  private:
    nlohmann::detail::json_sax_dom_parser<json> dom_;
    const std::size_t *consumed_;
    int depth_ = 0;
    std::string top_key_;
    std::string key_;
};

struct LineCol {
    std::size_t line;
    std::size_t column;
};

LineCol locate(std::string_view text, std::size_t offset) {
    LineCol lc{1, 1};
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++lc.line;
            lc.column = 1;
        } else {
            ++lc.column;
        }
    }
    return lc;
}

std::string where(std::string_view source, std::optional<LineCol> lc) {
    std::string out(source);
    if (lc) {
        out += ":" + std::to_string(lc->line) + ":" + std::to_string(lc->column);
    }
    return out + ": ";
}

double read_coefficient(const json &c, const std::string &ctx) {
    if (c.is_number()) {
        return c.get<double>();
    }
    if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
        const double im = c[1].get<double>();
        if (std::abs(im) > 1e-12) {
            throw ValidationError(ctx + "coefficient has imaginary part " + std::to_string(im) +
                                  "; Hermitian Hamiltonians need real coefficients");
        }
        return c[0].get<double>();
    }
    throw ValidationError(ctx + "\"coeff\" must be a number or a [re, im] pair");
}

std::vector<WeightedTerm> read_terms(const json &arr, std::string_view source,
                                     std::string_view text,
                                     const std::vector<std::size_t> *offsets) {
    if (!arr.is_array()) {
        throw ValidationError(where(source, std::nullopt) + "\"terms\" must be an array");
    }
    std::vector<WeightedTerm> terms;
    terms.reserve(arr.size());
    for (std::size_t j = 0; j < arr.size(); ++j) {
        const json &t = arr[j];
        std::optional<LineCol> lc;
        if (offsets && j < offsets->size()) {
            lc = locate(text, (*offsets)[j]);
        }
        const std::string ctx = where(source, lc) + "term " + std::to_string(j) + ": ";
        if (!t.is_object() || !t.contains("coeff") || !t.contains("pauli") ||
            !t["pauli"].is_string()) {
            throw ValidationError(ctx + "expected {\"coeff\": number, \"pauli\": string}");
        }
        WeightedTerm term;
        term.coeff = read_coefficient(t["coeff"], ctx);
        const auto &word = t["pauli"].get_ref<const std::string &>();
        try {
            term.pauli = PauliString::parse(word);
        } catch (const ParseError &e) {
            std::optional<LineCol> at;
            if (lc) {
                at = LineCol{lc->line, lc->column + e.position()};
            }
            throw ParseError(where(source, at) + "term " + std::to_string(j) + ": " + e.what(),
                             e.position());
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

template <typename T>
T required(const json &doc, const char *key, std::string_view source) {
    if (!doc.contains(key)) {
        throw ValidationError(where(source, std::nullopt) + "missing field \"" + key + "\"");
    }
    try {
        return doc[key].get<T>();
    } catch (const json::exception &) {
        throw ValidationError(where(source, std::nullopt) + "field \"" + key +
                              "\" has the wrong type");
    }
}

std::string format_coeff(double c) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", c);
    return buf;
}

}  // namespace

QubitHamiltonian parse_hamiltonian(std::string_view text, std::string_view source) {
    json doc;
    std::size_t consumed = 0;
    LocatingSax sax(doc, &consumed);
    try {
        json::sax_parse(CountingIterator(text.data(), &consumed),
                        CountingIterator(text.data() + text.size(), nullptr), &sax);
    } catch (const json::parse_error &e) {
        const LineCol lc = locate(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(where(source, lc) + "malformed JSON: " + e.what(), e.byte);
    }
    if (!doc.is_object()) {
        throw ParseError(where(source, std::nullopt) + "top level must be an object", 0);
    }

    auto name = required<std::string>(doc, "name", source);
    auto n_qubits = required<std::int64_t>(doc, "n_qubits", source);
    auto hf = required<std::string>(doc, "hf_bitstring", source);
    if (!doc.contains("terms")) {
        throw ValidationError(where(source, std::nullopt) + "missing field \"terms\"");
    }
    if (n_qubits <= 0) {
        throw ValidationError(where(source, std::nullopt) + "n_qubits must be positive");
    }
    auto terms = read_terms(doc["terms"], source, text, &sax.pauli_offsets);
    json metadata = doc.contains("metadata") ? doc["metadata"] : json::object();
    try {
        return QubitHamiltonian(std::move(name), static_cast<std::size_t>(n_qubits),
                                std::move(terms), std::move(hf), std::move(metadata));
    } catch (const ParseError &e) {
        throw ParseError(where(source, std::nullopt) + e.what(), e.position());
    } catch (const ValidationError &e) {
        throw ValidationError(where(source, std::nullopt) + e.what());
    }
}

QubitHamiltonian load_hamiltonian(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("E_IO", "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hamiltonian(buf.str(), path.string());
}

std::string save_hamiltonian(const QubitHamiltonian &h) {
    std::string out = "{\n";
    out += " \"name\": " + json(h.name()).dump() + ",\n";
    out += " \"n_qubits\": " + std::to_string(h.n_qubits()) + ",\n";
    out += " \"hf_bitstring\": " + json(h.hf_bitstring()).dump() + ",\n";
    out += " \"terms\": [\n";
    const auto terms = h.terms();
    for (std::size_t j = 0; j < terms.size(); ++j) {
        out += "  {\"coeff\": " + format_coeff(terms[j].coeff) + ", \"pauli\": \"" +
               terms[j].pauli.str() + "\"}";
        out += j + 1 < terms.size() ? ",\n" : "\n";
    }
    out += " ],\n";
    out += " \"metadata\": " + h.metadata().dump() + "\n";
    out += "}\n";
    return out;
}

void save_hamiltonian(const QubitHamiltonian &h, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("E_IO", "cannot write " + path.string());
    }
    out << save_hamiltonian(h);
}

std::vector<NamedOperator> symmetry_operators(const QubitHamiltonian &h) {
    std::vector<NamedOperator> ops;
    const json &md = h.metadata();
    if (!md.contains("symmetry_ops")) {
        return ops;
    }
    const json &list = md["symmetry_ops"];
    if (!list.is_array()) {
        throw ValidationError("metadata.symmetry_ops must be an array");
    }
    for (const json &entry : list) {
        if (!entry.is_object() || !entry.contains("terms")) {
            throw ValidationError("symmetry operator entries need a \"terms\" array");
        }
        NamedOperator op;
        op.name = entry.value("name", std::string("unnamed"));
        op.terms = read_terms(entry["terms"], "symmetry_ops", {}, nullptr);
        for (const auto &t : op.terms) {
            if (t.pauli.n_qubits() != h.n_qubits()) {
                throw ValidationError("symmetry operator '" + op.name +
                                      "' has a term of the wrong length");
            }
        }
        ops.push_back(std::move(op));
    }
    return ops;
}

}  // namespace hamvqe
