package sm;

public class RecordHolder {

    private int campo1;
    private int campo2;
    private int campo3;
    private int campo4;

    public int getCampo1() { return campo1; }
    public void setCampo1(int v) { campo1 = v; }
    public int getCampo2() { return campo2; }
    public void setCampo2(int v) { campo2 = v; }
    public int getCampo3() { return campo3; }
    public void setCampo3(int v) { campo3 = v; }
    public int getCampo4() { return campo4; }
    public void setCampo4(int v) { campo4 = v; }
}
