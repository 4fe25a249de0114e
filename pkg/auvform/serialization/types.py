"""Definitions of the binary field types used by network and checkpoint
files. Each type has a method which is used to read and write it; all
multi-byte values are big-endian so files are identical across platforms.
"""
import struct

import numpy as np

from ..exceptions import IntegrityError


__all__ = (
    "Type",
    "Boolean",
    "UnsignedByte",
    "UnsignedShort",
    "VarInt",
    "Double",
    "FixedBytes",
    "String",
    "DoubleArray",
)


def read_exact(file_object, length):
    data = file_object.read(length)
    if len(data) < length:
        raise IntegrityError(
            "Unexpected end of stream: wanted %d bytes, got %d." % (length, len(data))
        )
    return data


class Type(object):
    __slots__ = ()

    @classmethod
    def read(cls, file_object):
        raise NotImplementedError('"read" must be overridden in a subclass.')

    @classmethod
    def send(cls, value, socket):
        raise NotImplementedError('"send" must be overridden in a subclass.')


class Boolean(Type):
    @staticmethod
    def read(file_object):
        return struct.unpack("?", read_exact(file_object, 1))[0]

    @staticmethod
    def send(value, socket):
        socket.send(struct.pack("?", value))


class UnsignedByte(Type):
    @staticmethod
    def read(file_object):
        return struct.unpack(">B", read_exact(file_object, 1))[0]

    @staticmethod
    def send(value, socket):
        socket.send(struct.pack(">B", value))


class UnsignedShort(Type):
    @staticmethod
    def read(file_object):
        return struct.unpack(">H", read_exact(file_object, 2))[0]

    @staticmethod
    def send(value, socket):
        socket.send(struct.pack(">H", value))


class VarInt(Type):
    max_bytes = 10

    @classmethod
    def read(cls, file_object):
        number = 0
        # Limit of 'cls.max_bytes' bytes, so a corrupt stream cannot make us
        # accumulate an arbitrarily large integer
        bytes_encountered = 0
        while True:
            byte = ord(read_exact(file_object, 1))
            number |= (byte & 0x7F) << 7 * bytes_encountered
            if not byte & 0x80:
                break

            bytes_encountered += 1
            if bytes_encountered >= cls.max_bytes:
                raise IntegrityError("Tried to read too long of a VarInt")
        return number

    @staticmethod
    def send(value, socket):
        if value < 0:
            raise ValueError("VarInt cannot encode negative value %r" % value)
        out = bytes()
        while True:
            byte = value & 0x7F
            value >>= 7
            out += struct.pack("B", byte | (0x80 if value > 0 else 0))
            if value == 0:
                break
        socket.send(out)


class Double(Type):
    @staticmethod
    def read(file_object):
        return struct.unpack(">d", read_exact(file_object, 8))[0]

    @staticmethod
    def send(value, socket):
        socket.send(struct.pack(">d", value))


class FixedBytes(Type):
    """ A fixed-width run of raw bytes, e.g. a magic header or a digest.
        Instances carry the width: 'FixedBytes(4).read(stream)'. """

    __slots__ = ("length",)

    def __init__(self, length):
        self.length = length

    def read(self, file_object):
        return read_exact(file_object, self.length)

    def send(self, value, socket):
        if len(value) != self.length:
            raise ValueError("Expected %d bytes, got %d" % (self.length, len(value)))
        socket.send(value)


class String(Type):
    @staticmethod
    def read(file_object):
        length = VarInt.read(file_object)
        try:
            return read_exact(file_object, length).decode("utf-8")
        except UnicodeDecodeError as e:
            raise IntegrityError("Invalid UTF-8 string: %s" % e)

    @staticmethod
    def send(value, socket):
        value = value.encode("utf-8")
        VarInt.send(len(value), socket)
        socket.send(value)


class DoubleArray(Type):
    """ A float64 array of any shape: VarInt rank, one VarInt per dimension,
        then the elements in C order as big-endian IEEE-754 doubles. """

    @staticmethod
    def read(file_object):
        rank = VarInt.read(file_object)
        shape = tuple(VarInt.read(file_object) for _ in range(rank))
        count = int(np.prod(shape, dtype=np.int64)) if shape else 1
        raw = read_exact(file_object, 8 * count)
        return np.frombuffer(raw, dtype=">f8").astype(np.float64).reshape(shape)

    @staticmethod
    def send(value, socket):
        value = np.asarray(value, dtype=np.float64)
        VarInt.send(value.ndim, socket)
        for dim in value.shape:
            VarInt.send(dim, socket)
        socket.send(np.ascontiguousarray(value, dtype=">f8").tobytes())
