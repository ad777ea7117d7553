// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace wetbase {

/// Fixed-capacity FIFO. Index 0 is the oldest element; pushing into a full
/// buffer overwrites it.
template <typename T>
class RingBuffer {
public:
    explicit RingBuffer(std::size_t capacity) : data_(capacity) {}

    void push(const T& value) {
        if (data_.empty()) {
            return;
        }
        data_[(head_ + size_) % data_.size()] = value;
        if (size_ < data_.size()) {
            ++size_;
        } else {
            head_ = (head_ + 1) % data_.size();
        }
    }

    void pop_front() {
        if (size_ > 0) {
            head_ = (head_ + 1) % data_.size();
            --size_;
        }
    }

    [[nodiscard]] const T& operator[](std::size_t i) const { return data_[(head_ + i) % data_.size()]; }
    [[nodiscard]] const T& back() const { return (*this)[size_ - 1]; }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t capacity() const noexcept { return data_.size(); }
    [[nodiscard]] bool full() const noexcept { return size_ == data_.size(); }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

private:
    std::vector<T> data_;
    std::size_t head_ = 0;
    std::size_t size_ = 0;
};

/// Read-only view of a contiguous run [offset, offset + count) of a ring buffer.
template <typename T>
class RingSlice {
public:
    RingSlice(const RingBuffer<T>& ring, std::size_t offset, std::size_t count)
        : ring_(&ring), offset_(offset), count_(count) {}

    [[nodiscard]] const T& operator[](std::size_t i) const { return (*ring_)[offset_ + i]; }
    [[nodiscard]] std::size_t size() const noexcept { return count_; }

private:
    const RingBuffer<T>* ring_;
    std::size_t offset_;
    std::size_t count_;
};

} // namespace wetbase
