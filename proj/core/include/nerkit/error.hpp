#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nerkit {

// Root of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A problem at a specific line of CoNLL input. `file` is filled in by
// load_dataset; parse_conll alone leaves it empty.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line_no, std::string file = {})
      : Error(file.empty() ? "line " + std::to_string(line_no) + ": " + what
                           : file + ":" + std::to_string(line_no) + ": " + what),
        line_no_(line_no),
        file_(std::move(file)) {}

  std::size_t line_no() const noexcept { return line_no_; }
  const std::string& file() const noexcept { return file_; }

 private:
  std::size_t line_no_;
  std::string file_;
};

class MalformedLine : public ParseError {
 public:
  explicit MalformedLine(std::size_t line_no, std::string file = {})
      : ParseError("expected at least two fields (token and tag)", line_no, std::move(file)) {}
};

class BadTag : public ParseError {
 public:
  BadTag(std::size_t line_no, std::string text, std::string file = {})
      : ParseError("invalid tag '" + text + "'", line_no, std::move(file)), text_(std::move(text)) {}

  const std::string& text() const noexcept { return text_; }

 private:
  std::string text_;
};

class MissingSplit : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  explicit LengthMismatch(std::size_t sentence_index)
      : Error("gold/prediction shape mismatch at sentence " + std::to_string(sentence_index)),
        sentence_index_(sentence_index) {}

  std::size_t sentence_index() const noexcept { return sentence_index_; }

 private:
  std::size_t sentence_index_;
};

class EmptyTrainingData : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class EmptySentence : public Error {
 public:
  EmptySentence() : Error("empty sentence") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ModelLabelMismatch : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class VersionMismatch : public Error {
 public:
  using Error::Error;
};

class CorruptModel : public Error {
 public:
  using Error::Error;
};

// Failure inside one cell (or row, when col is empty) of an experiment matrix.
class MatrixError : public Error {
 public:
  MatrixError(std::string row, std::string col, const std::string& cause)
      : Error("matrix[" + row + (col.empty() ? "" : ", " + col) + "]: " + cause),
        row_(std::move(row)),
        col_(std::move(col)) {}

  const std::string& row() const noexcept { return row_; }
  const std::string& col() const noexcept { return col_; }

 private:
  std::string row_;
  std::string col_;
};

}  // namespace nerkit
