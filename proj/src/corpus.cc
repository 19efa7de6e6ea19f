// Copyright 2026 The wsdkit Authors.
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

#include "wsd/corpus.hpp"

#include <expat.h>

#include <algorithm>
#include <memory>
#include <set>

#include "wsd/error.hpp"
#include "wsd/inventory.hpp"
#include "wsd/text.hpp"

namespace wsd {

std::size_t Corpus::sentence_count() const {
  std::size_t n = 0;
  for (const Document& doc : documents) n += doc.sentences.size();
  return n;
}

std::size_t Corpus::instance_count() const { return instances().size(); }

std::vector<const Token*> Corpus::instances() const {
  std::vector<const Token*> out;
  for (const Document& doc : documents) {
    for (const Sentence& sentence : doc.sentences) {
      for (const Token& token : sentence.tokens) {
        if (token.is_instance()) out.push_back(&token);
      }
    }
  }
  return out;
}

void check_corpus(const Corpus& corpus) {
  std::set<std::string_view> doc_ids;
  std::set<std::string_view> sentence_ids;
  std::set<std::string_view> instance_ids;
  for (const Document& doc : corpus.documents) {
    if (doc.id.empty()) throw SchemaError("document with empty id");
    if (!doc_ids.insert(doc.id).second) {
      throw SchemaError("duplicate document id " + doc.id);
    }
    for (const Sentence& sentence : doc.sentences) {
      if (sentence.id.empty()) {
        throw SchemaError("sentence with empty id in document " + doc.id);
      }
      if (!sentence_ids.insert(sentence.id).second) {
        throw SchemaError("duplicate sentence id " + sentence.id);
      }
      const std::string prefix = sentence.id + ".";
      for (const Token& token : sentence.tokens) {
        if (token.surface.empty()) {
          throw SchemaError("empty token surface in sentence " + sentence.id);
        }
        if (!token.is_instance()) {
          if (!token.instance_id.empty()) {
            throw SchemaError("word form carries id " + token.instance_id +
                              " in sentence " + sentence.id);
          }
          continue;
        }
        if (token.instance_id.empty()) {
          throw SchemaError("instance without id in sentence " + sentence.id);
        }
        if (token.instance_id.rfind(prefix, 0) != 0) {
          throw SchemaError("instance id " + token.instance_id +
                            " is not prefixed by sentence id " + sentence.id);
        }
        if (!instance_ids.insert(token.instance_id).second) {
          throw SchemaError("duplicate instance id " + token.instance_id);
        }
      }
    }
  }
}

namespace {

enum class Level { kDocument, kCorpus, kText, kSentence, kToken };

struct ParseState {
  XML_Parser parser = nullptr;
  Corpus corpus;
  Level level = Level::kDocument;
  bool seen_root = false;
  Token token;
  std::string error;
  long error_line = 0;
  long error_column = 0;

  void fail(std::string message) {
    if (!error.empty()) return;
    error = std::move(message);
    error_line = static_cast<long>(XML_GetCurrentLineNumber(parser));
    error_column = static_cast<long>(XML_GetCurrentColumnNumber(parser)) + 1;
    XML_StopParser(parser, XML_FALSE);
  }
};

// Collects attributes into a map, rejecting names outside `allowed`.
bool read_attributes(ParseState& state, const char* element,
                     const XML_Char** attrs,
                     std::initializer_list<std::string_view> allowed,
                     std::map<std::string, std::string>& out) {
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    const std::string_view name = attrs[i];
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      state.fail("unknown attribute '" + std::string(name) + "' on <" +
                 element + ">");
      return false;
    }
    out[std::string(name)] = attrs[i + 1];
  }
  return true;
}

bool require_attr(ParseState& state, const char* element,
                  const std::map<std::string, std::string>& attrs,
                  const char* name, std::string& out) {
  auto it = attrs.find(name);
  if (it == attrs.end()) {
    state.fail(std::string("<") + element + "> missing attribute '" + name + "'");
    return false;
  }
  out = it->second;
  return true;
}

bool read_entity_flag(ParseState& state,
                      const std::map<std::string, std::string>& attrs,
                      bool& out) {
  auto it = attrs.find("entity");
  if (it == attrs.end()) return true;
  if (it->second == "1" || it->second == "true") {
    out = true;
  } else if (it->second == "0" || it->second == "false") {
    out = false;
  } else {
    state.fail("attribute 'entity' must be 0/1, got '" + it->second + "'");
    return false;
  }
  return true;
}

void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
  auto& state = *static_cast<ParseState*>(data);
  const std::string_view element = name;
  std::map<std::string, std::string> values;

  if (element == "corpus") {
    if (state.level != Level::kDocument || state.seen_root) {
      state.fail("unexpected <corpus>");
      return;
    }
    if (!read_attributes(state, name, attrs, {"lang", "source"}, values)) return;
    state.corpus.lang = values["lang"];
    state.corpus.source = values["source"];
    state.seen_root = true;
    state.level = Level::kCorpus;
  } else if (element == "text") {
    if (state.level != Level::kCorpus) {
      state.fail("<text> outside <corpus>");
      return;
    }
    if (!read_attributes(state, name, attrs, {"id"}, values)) return;
    Document doc;
    if (!require_attr(state, name, values, "id", doc.id)) return;
    state.corpus.documents.push_back(std::move(doc));
    state.level = Level::kText;
  } else if (element == "sentence") {
    if (state.level != Level::kText) {
      state.fail("<sentence> outside <text>");
      return;
    }
    if (!read_attributes(state, name, attrs, {"id"}, values)) return;
    Sentence sentence;
    if (!require_attr(state, name, values, "id", sentence.id)) return;
    state.corpus.documents.back().sentences.push_back(std::move(sentence));
    state.level = Level::kSentence;
  } else if (element == "wf" || element == "instance") {
    if (state.level != Level::kSentence) {
      state.fail("<" + std::string(element) + "> outside <sentence>");
      return;
    }
    state.token = Token{};
    if (element == "wf") {
      if (!read_attributes(state, name, attrs, {"lemma", "pos", "entity"},
                           values)) {
        return;
      }
      state.token.kind = TokenKind::kWordForm;
      state.token.lemma = values["lemma"];
      state.token.pos = PosTag(values["pos"]);
    } else {
      if (!read_attributes(state, name, attrs, {"id", "lemma", "pos", "entity"},
                           values)) {
        return;
      }
      state.token.kind = TokenKind::kInstance;
      std::string pos;
      if (!require_attr(state, name, values, "id", state.token.instance_id) ||
          !require_attr(state, name, values, "lemma", state.token.lemma) ||
          !require_attr(state, name, values, "pos", pos)) {
        return;
      }
      if (state.token.instance_id.empty()) {
        state.fail("<instance> with empty id");
        return;
      }
      state.token.pos = PosTag(pos);
    }
    if (!read_entity_flag(state, values, state.token.entity)) return;
    state.level = Level::kToken;
  } else {
    state.fail("unknown element <" + std::string(element) + ">");
  }
}

void XMLCALL on_end(void* data, const XML_Char* name) {
  auto& state = *static_cast<ParseState*>(data);
  const std::string_view element = name;
  switch (state.level) {
    case Level::kToken:
      if (state.token.surface.empty()) {
        state.fail("<" + std::string(element) + "> with empty surface");
        return;
      }
      state.corpus.documents.back().sentences.back().tokens.push_back(
          std::move(state.token));
      state.level = Level::kSentence;
      break;
    case Level::kSentence:
      state.level = Level::kText;
      break;
    case Level::kText:
      state.level = Level::kCorpus;
      break;
    case Level::kCorpus:
      state.level = Level::kDocument;
      break;
    case Level::kDocument:
      break;
  }
}

void XMLCALL on_text(void* data, const XML_Char* text, int length) {
  auto& state = *static_cast<ParseState*>(data);
  const std::string_view chunk(text, static_cast<std::size_t>(length));
  if (state.level == Level::kToken) {
    state.token.surface.append(chunk);
  } else if (!trim(chunk).empty()) {
    state.fail("unexpected text '" + std::string(trim(chunk)) + "'");
  }
}

}  // namespace

Corpus parse_corpus_xml(std::string_view text) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)>
      parser(XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw Error("cannot create XML parser");
  ParseState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);

  const XML_Status status = XML_Parse(
      parser.get(), text.data(), static_cast<int>(text.size()), XML_TRUE);
  if (!state.error.empty()) {
    throw SchemaError("line " + std::to_string(state.error_line) + ", column " +
                      std::to_string(state.error_column) + ": " + state.error);
  }
  if (status != XML_STATUS_OK) {
    const long line = static_cast<long>(XML_GetCurrentLineNumber(parser.get()));
    const long column =
        static_cast<long>(XML_GetCurrentColumnNumber(parser.get())) + 1;
    throw XmlParseError("line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " +
                            XML_ErrorString(XML_GetErrorCode(parser.get())),
                        line, column);
  }
  if (!state.seen_root) throw SchemaError("document has no <corpus> element");
  check_corpus(state.corpus);
  return std::move(state.corpus);
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      case '\t': out += "&#9;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

void append_attr(std::string& out, std::string_view name, std::string_view value) {
  out += ' ';
  out += name;
  out += "=\"";
  out += xml_escape(value);
  out += '"';
}

}  // namespace

std::string emit_corpus_xml(const Corpus& corpus) {
  check_corpus(corpus);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<corpus";
  append_attr(out, "lang", corpus.lang);
  if (!corpus.source.empty()) append_attr(out, "source", corpus.source);
  out += ">\n";
  for (const Document& doc : corpus.documents) {
    out += "  <text";
    append_attr(out, "id", doc.id);
    out += ">\n";
    for (const Sentence& sentence : doc.sentences) {
      out += "    <sentence";
      append_attr(out, "id", sentence.id);
      out += ">\n";
      for (const Token& token : sentence.tokens) {
        const char* tag = token.is_instance() ? "instance" : "wf";
        out += "      <";
        out += tag;
        if (token.is_instance()) append_attr(out, "id", token.instance_id);
        if (token.is_instance() || !token.lemma.empty()) {
          append_attr(out, "lemma", token.lemma);
        }
        if (token.is_instance() || !token.pos.empty()) {
          append_attr(out, "pos", token.pos.str());
        }
        if (token.entity) append_attr(out, "entity", "1");
        out += '>';
        out += xml_escape(token.surface);
        out += "</";
        out += tag;
        out += ">\n";
      }
      out += "    </sentence>\n";
    }
    out += "  </text>\n";
  }
  out += "</corpus>\n";
  return out;
}

GoldKeys parse_gold(std::string_view text) {
  GoldKeys keys;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    const std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_fields(line);
    if (fields.size() < 2) {
      throw FormatError("gold line " + std::to_string(line_no) +
                        ": expected '<instance_id> <sense_id>...'");
    }
    std::string id = std::move(fields.front());
    fields.erase(fields.begin());
    if (keys.count(id) != 0) {
      throw FormatError("gold line " + std::to_string(line_no) +
                        ": duplicate instance id " + id);
    }
    keys.emplace(std::move(id), std::move(fields));
  }
  return keys;
}

std::string emit_gold(const GoldKeys& keys) {
  std::string out;
  for (const auto& [id, senses] : keys) {
    out += id;
    for (const std::string& sense : senses) {
      out += ' ';
      out += sense;
    }
    out += '\n';
  }
  return out;
}

std::size_t ValidationReport::count(FindingKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(),
                    [kind](const Finding& f) { return f.kind == kind; }));
}

std::string to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::kMissingKey: return "missing-key";
    case FindingKind::kUnknownInstance: return "unknown-instance";
    case FindingKind::kInventoryMismatch: return "inventory-mismatch";
  }
  return "?";
}

ValidationReport validate(const Corpus& corpus, const GoldKeys& keys,
                          const SenseInventory* inventory) {
  ValidationReport report;
  std::set<std::string_view> corpus_ids;
  for (const Token* token : corpus.instances()) {
    corpus_ids.insert(token->instance_id);
    auto it = keys.find(token->instance_id);
    if (it == keys.end()) {
      report.findings.push_back(
          {FindingKind::kMissingKey, token->instance_id, "no gold key"});
      continue;
    }
    if (inventory == nullptr) continue;
    const LexicalEntry* entry = inventory->lookup(token->lemma, token->pos);
    for (const std::string& sense : it->second) {
      if (entry == nullptr || !entry->position_of(sense)) {
        report.findings.push_back(
            {FindingKind::kInventoryMismatch, token->instance_id,
             sense + " is not a sense of " + token->lemma + "#" +
                 token->pos.str()});
      }
    }
  }
  for (const auto& [id, senses] : keys) {
    if (corpus_ids.count(id) == 0) {
      report.findings.push_back(
          {FindingKind::kUnknownInstance, id, "gold key without instance"});
    }
  }
  return report;
}

}  // namespace wsd
