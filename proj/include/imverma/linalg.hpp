#pragma once

#include "imverma/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace imverma {

using DenseVec = std::vector<Rational>;

/// Sparse vector over the rationals; absent keys are zero, stored values never are.
using SparseVec = std::map<std::size_t, Rational>;

/// Adds `scale * src` into `dst`, erasing entries that cancel.
void axpy(SparseVec &dst, Rational const &scale, SparseVec const &src);

/// Dense row-major rational matrix.
class Matrix
{
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

	static Matrix identity(std::size_t n);
	static Matrix from_columns(std::vector<DenseVec> const &cols, std::size_t rows);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	Rational const &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	DenseVec column(std::size_t c) const;
	DenseVec apply(DenseVec const &v) const;

	friend Matrix operator*(Matrix const &a, Matrix const &b);
	friend Matrix operator-(Matrix const &a, Matrix const &b);
	friend bool operator==(Matrix const &a, Matrix const &b) = default;

private:
	std::size_t rows_ = 0, cols_ = 0;
	std::vector<Rational> data_;
};

/// In-place reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix &m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<DenseVec> nullspace(Matrix m);

Rational determinant(Matrix m);

/// Throws DomainError when `m` is singular.
Matrix inverse(Matrix const &m);

/// Result of column-incremental sparse elimination.
struct SparseKernel
{
	/// Kernel basis, expressed as combinations of the input columns.
	std::vector<SparseVec> kernel;
	std::size_t rank = 0;
};

/// Kernel and rank of the map whose j-th column (image of the j-th domain vector) is `columns[j]`.
SparseKernel sparse_kernel(std::vector<SparseVec> const &columns);

/// Incremental echelon basis of a span of sparse vectors.
class SparseEchelon
{
public:
	/// Returns true when `v` was independent of everything inserted before.
	bool insert(SparseVec v);
	bool contains(SparseVec v) const;
	std::size_t rank() const { return rows_.size(); }

private:
	void reduce(SparseVec &v) const;
	std::map<std::size_t, SparseVec> rows_; // keyed by leading index
};

} // namespace imverma
