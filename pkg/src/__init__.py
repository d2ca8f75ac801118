# Cube Magic - Magic labellings of the cube
