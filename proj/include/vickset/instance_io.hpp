// Copyright 2026 The vickset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "vickset/combinatorial.hpp"
#include "vickset/error.hpp"
#include "vickset/text.hpp"
#include "vickset/value.hpp"

// Line-oriented instance and outcome files. Every line is blank, a `#`
// comment, or a keyword followed by Value-encoded fields:
//
//   goods   <set>
//   bidders <set>
//   bid     <bidder> <bundle> <value>
//
//   allocation <relation>
//   payments   <relation>
//   welfare    <number>

namespace vickset {

namespace io_detail {

/// Walks the lines of a document keeping absolute offsets for errors.
class LineCursor {
  public:
    explicit LineCursor(std::string_view text) : text_(text) {}

    /// Advances to the next non-blank, non-comment line. Returns the keyword,
    /// leaving the read position just after it.
    std::optional<std::string> next_keyword() {
        while (pos_ < text_.size()) {
            skip_spaces();
            if (pos_ >= text_.size()) {
                break;
            }
            char c = text_[pos_];
            if (c == '\n') {
                ++pos_;
                continue;
            }
            if (c == '#') {
                skip_line();
                continue;
            }
            keyword_pos_ = pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && !is_space(text_[pos_])) {
                ++pos_;
            }
            return std::string(text_.substr(start, pos_ - start));
        }
        return std::nullopt;
    }

    Value field() {
        skip_spaces();
        if (pos_ >= text_.size() || text_[pos_] == '\n') {
            throw ParseError("missing field", pos_);
        }
        std::string_view line = text_.substr(0, line_end());
        ValueReader reader(line, pos_);
        return canonicalize(reader.read());
    }

    void end_line() {
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] == '#') {
            skip_line();
            return;
        }
        if (pos_ < text_.size() && text_[pos_] != '\n') {
            throw ParseError("unexpected trailing field", pos_);
        }
    }

    [[nodiscard]] std::size_t keyword_position() const { return keyword_pos_; }

  private:
    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    }

    void skip_spaces() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    void skip_line() {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            ++pos_;
        }
    }

    [[nodiscard]] std::size_t line_end() const {
        std::size_t end = text_.find('\n', pos_);
        return end == std::string_view::npos ? text_.size() : end;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t keyword_pos_ = 0;
};

}  // namespace io_detail

/// Parses and validates an instance document. Syntax errors raise
/// ParseError; semantic problems raise ValidationError or CapExceeded.
inline CombinatorialInstance parse_instance(std::string_view text) {
    io_detail::LineCursor cursor(text);
    std::optional<Value> goods;
    std::optional<Value> bidders;
    CombinatorialInstance inst;
    while (auto keyword = cursor.next_keyword()) {
        std::size_t at = cursor.keyword_position();
        if (*keyword == "goods" || *keyword == "bidders") {
            auto& slot = *keyword == "goods" ? goods : bidders;
            if (slot) {
                throw ValidationError("duplicate '" + *keyword + "' line at offset " +
                                      std::to_string(at));
            }
            slot = cursor.field();
        } else if (*keyword == "bid") {
            Value bidder = cursor.field();
            Value bundle = cursor.field();
            Value amount = cursor.field();
            if (!amount.is_number()) {
                throw ValidationError("bid value must be a number at offset " +
                                      std::to_string(at));
            }
            if (!inst.valuation.emplace(std::make_pair(bidder, bundle), amount.as_number())
                     .second) {
                throw ValidationError("duplicate bid at offset " + std::to_string(at));
            }
        } else {
            throw ParseError("unknown keyword '" + *keyword + "'", at);
        }
        cursor.end_line();
    }
    if (!goods || !bidders) {
        throw ValidationError("instance needs both a 'goods' and a 'bidders' line");
    }
    inst.goods = *goods;
    inst.bidders = *bidders;
    inst.validate();
    return inst;
}

inline std::string write_instance(const CombinatorialInstance& inst) {
    std::string out = "goods " + to_text(inst.goods) + "\n";
    out += "bidders " + to_text(inst.bidders) + "\n";
    for (const auto& [key, v] : inst.valuation) {
        out += "bid " + to_text(key.first) + " " + to_text(key.second) + " " +
               v.to_string() + "\n";
    }
    return out;
}

inline std::string write_outcome(const Outcome& outcome) {
    return "allocation " + to_text(outcome.allocation.value()) + "\npayments " +
           to_text(outcome.payments.value()) + "\nwelfare " +
           outcome.welfare.to_string() + "\n";
}

inline Outcome parse_outcome(std::string_view text) {
    io_detail::LineCursor cursor(text);
    std::optional<Value> allocation;
    std::optional<Value> payments;
    std::optional<Value> welfare;
    while (auto keyword = cursor.next_keyword()) {
        std::size_t at = cursor.keyword_position();
        std::optional<Value>* slot = nullptr;
        if (*keyword == "allocation") {
            slot = &allocation;
        } else if (*keyword == "payments") {
            slot = &payments;
        } else if (*keyword == "welfare") {
            slot = &welfare;
        } else {
            throw ParseError("unknown keyword '" + *keyword + "'", at);
        }
        if (slot->has_value()) {
            throw ValidationError("duplicate '" + *keyword + "' line");
        }
        *slot = cursor.field();
        cursor.end_line();
    }
    if (!allocation || !payments || !welfare || !welfare->is_number()) {
        throw ValidationError("outcome needs allocation, payments and a numeric welfare");
    }
    return Outcome{Relation(*allocation), Relation(*payments), welfare->as_number()};
}

}  // namespace vickset
