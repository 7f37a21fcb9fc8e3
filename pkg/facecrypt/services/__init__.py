# Cipher Stages, Analysis and File I/O
