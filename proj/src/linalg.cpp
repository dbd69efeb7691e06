#include "imverma/linalg.hpp"

#include <utility>

namespace imverma {

void axpy(SparseVec &dst, Rational const &scale, SparseVec const &src)
{
	if (scale == 0)
		return;
	for (auto const &[k, v] : src)
	{
		auto [it, inserted] = dst.try_emplace(k, 0);
		it->second += scale * v;
		if (it->second == 0)
			dst.erase(it);
	}
}

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Matrix Matrix::from_columns(std::vector<DenseVec> const &cols, std::size_t rows)
{
	Matrix m(rows, cols.size());
	for (std::size_t c = 0; c < cols.size(); ++c)
		for (std::size_t r = 0; r < rows; ++r)
			m(r, c) = cols[c][r];
	return m;
}

DenseVec Matrix::column(std::size_t c) const
{
	DenseVec v(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

DenseVec Matrix::apply(DenseVec const &v) const
{
	DenseVec out(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			if ((*this)(r, c) != 0)
				out[r] += (*this)(r, c) * v[c];
	return out;
}

Matrix operator*(Matrix const &a, Matrix const &b)
{
	Matrix out(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k)
		{
			auto const &x = a(i, k);
			if (x == 0)
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				if (b(k, j) != 0)
					out(i, j) += x * b(k, j);
		}
	return out;
}

Matrix operator-(Matrix const &a, Matrix const &b)
{
	Matrix out = a;
	for (std::size_t i = 0; i < out.data_.size(); ++i)
		out.data_[i] -= b.data_[i];
	return out;
}

std::vector<std::size_t> rref(Matrix &m)
{
	std::vector<std::size_t> pivots;
	std::size_t row = 0;
	for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col)
	{
		std::size_t sel = row;
		while (sel < m.rows() && m(sel, col) == 0)
			++sel;
		if (sel == m.rows())
			continue;
		if (sel != row)
			for (std::size_t c = 0; c < m.cols(); ++c)
				std::swap(m(sel, c), m(row, c));
		Rational inv = 1 / m(row, col);
		for (std::size_t c = col; c < m.cols(); ++c)
			m(row, c) *= inv;
		for (std::size_t r = 0; r < m.rows(); ++r)
		{
			if (r == row || m(r, col) == 0)
				continue;
			Rational f = m(r, col);
			for (std::size_t c = col; c < m.cols(); ++c)
				if (m(row, c) != 0)
					m(r, c) -= f * m(row, c);
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<DenseVec> nullspace(Matrix m)
{
	auto pivots = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : pivots)
		is_pivot[p] = true;
	std::vector<DenseVec> basis;
	for (std::size_t free = 0; free < m.cols(); ++free)
	{
		if (is_pivot[free])
			continue;
		DenseVec v(m.cols());
		v[free] = 1;
		for (std::size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = -m(r, free);
		basis.push_back(std::move(v));
	}
	return basis;
}

Rational determinant(Matrix m)
{
	if (m.rows() != m.cols())
		throw DomainError("determinant of a non-square matrix");
	Rational det = 1;
	std::size_t n = m.rows();
	for (std::size_t col = 0; col < n; ++col)
	{
		std::size_t sel = col;
		while (sel < n && m(sel, col) == 0)
			++sel;
		if (sel == n)
			return 0;
		if (sel != col)
		{
			for (std::size_t c = 0; c < n; ++c)
				std::swap(m(sel, c), m(col, c));
			det = -det;
		}
		det *= m(col, col);
		for (std::size_t r = col + 1; r < n; ++r)
		{
			if (m(r, col) == 0)
				continue;
			Rational f = m(r, col) / m(col, col);
			for (std::size_t c = col; c < n; ++c)
				m(r, c) -= f * m(col, c);
		}
	}
	return det;
}

Matrix inverse(Matrix const &m)
{
	std::size_t n = m.rows();
	if (n != m.cols())
		throw DomainError("inverse of a non-square matrix");
	Matrix aug(n, 2 * n);
	for (std::size_t r = 0; r < n; ++r)
	{
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = m(r, c);
		aug(r, n + r) = 1;
	}
	auto pivots = rref(aug);
	if (pivots.size() < n || pivots[n - 1] != n - 1)
		throw DomainError("matrix is singular");
	Matrix out(n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			out(r, c) = aug(r, n + c);
	return out;
}

void SparseEchelon::reduce(SparseVec &v) const
{
	// Leading indices of stored rows are unique, so eliminating the current
	// leading entry only introduces larger indices.
	auto it = v.begin();
	while (it != v.end())
	{
		auto row = rows_.find(it->first);
		if (row == rows_.end())
		{
			++it;
			continue;
		}
		std::size_t key = it->first;
		Rational f = it->second / row->second.begin()->second;
		axpy(v, -f, row->second);
		it = v.upper_bound(key);
	}
}

bool SparseEchelon::insert(SparseVec v)
{
	reduce(v);
	if (v.empty())
		return false;
	std::size_t lead = v.begin()->first;
	// keep every stored row reduced against the new pivot
	for (auto &[k, row] : rows_)
	{
		auto hit = row.find(lead);
		if (hit != row.end())
		{
			Rational f = hit->second / v.begin()->second;
			axpy(row, -f, v);
		}
	}
	rows_.emplace(lead, std::move(v));
	return true;
}

bool SparseEchelon::contains(SparseVec v) const
{
	reduce(v);
	return v.empty();
}

SparseKernel sparse_kernel(std::vector<SparseVec> const &columns)
{
	struct Entry
	{
		SparseVec image;
		SparseVec combo;
	};
	std::map<std::size_t, Entry> echelon; // keyed by leading row of image
	SparseKernel out;
	for (std::size_t j = 0; j < columns.size(); ++j)
	{
		Entry e{columns[j], SparseVec{{j, Rational(1)}}};
		while (!e.image.empty())
		{
			auto lead = e.image.begin();
			auto hit = echelon.find(lead->first);
			if (hit == echelon.end())
				break;
			Rational f = lead->second / hit->second.image.begin()->second;
			axpy(e.image, -f, hit->second.image);
			axpy(e.combo, -f, hit->second.combo);
		}
		if (e.image.empty())
			out.kernel.push_back(std::move(e.combo));
		else
		{
			std::size_t lead = e.image.begin()->first;
			echelon.emplace(lead, std::move(e));
		}
	}
	out.rank = echelon.size();
	return out;
}

} // namespace imverma
